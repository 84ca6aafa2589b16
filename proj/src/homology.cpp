#include "oreg/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>

namespace oreg {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Rank over GF(2). Columns arrive as lists of row indices; reduction works
// on packed 64-bit words with a pivot per lowest set row.
long long rank_gf2(int nrows, const std::vector<std::vector<int>>& columns) {
    if (nrows == 0 || columns.empty()) return 0;
    size_t words = static_cast<size_t>(nrows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivot_cols;
    std::vector<int> pivot_rows;
    long long rank = 0;
    std::vector<std::uint64_t> col(words);
    for (const auto& rows : columns) {
        std::fill(col.begin(), col.end(), 0);
        for (int r : rows) col[r >> 6] ^= 1ull << (r & 63);
        while (true) {
            int low = -1;
            for (size_t w = 0; w < words; ++w)
                if (col[w]) {
                    low = static_cast<int>(w * 64 + __builtin_ctzll(col[w]));
                    break;
                }
            if (low < 0) break;
            auto it = std::lower_bound(pivot_rows.begin(), pivot_rows.end(), low);
            size_t pos = static_cast<size_t>(it - pivot_rows.begin());
            if (it != pivot_rows.end() && *it == low) {
                const auto& p = pivot_cols[pos];
                for (size_t w = 0; w < words; ++w) col[w] ^= p[w];
            } else {
                pivot_rows.insert(pivot_rows.begin() + pos, low);
                pivot_cols.insert(pivot_cols.begin() + pos, col);
                ++rank;
                break;
            }
        }
    }
    return rank;
}

// Fraction-free (Bareiss) elimination; entries stay minors of the input, so
// everything is exact.
long long rank_rational(int nrows, const std::vector<std::vector<std::pair<int, int>>>& columns) {
    if (nrows == 0 || columns.empty()) return 0;
    size_t ncols = columns.size();
    std::vector<std::vector<BigInt>> m(nrows, std::vector<BigInt>(ncols, 0));
    for (size_t c = 0; c < ncols; ++c)
        for (const auto& [r, sign] : columns[c]) m[r][c] = sign;
    long long rank = 0;
    BigInt prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < static_cast<size_t>(nrows); ++col) {
        size_t piv = row;
        while (piv < static_cast<size_t>(nrows) && m[piv][col] == 0) ++piv;
        if (piv == static_cast<size_t>(nrows)) continue;
        std::swap(m[row], m[piv]);
        const BigInt p = m[row][col];
        for (size_t i = row + 1; i < static_cast<size_t>(nrows); ++i) {
            for (size_t j = col + 1; j < ncols; ++j)
                m[i][j] = (p * m[i][j] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = p;
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "rational"; }

std::vector<long long> reduced_ranks_by_size(const std::vector<std::uint32_t>& faces,
                                             Field field) {
    if (faces.empty()) return {};
    int max_size = 0;
    for (std::uint32_t f : faces) max_size = std::max(max_size, __builtin_popcount(f));

    std::vector<std::vector<std::uint32_t>> by_size(max_size + 1);
    for (std::uint32_t f : faces) by_size[__builtin_popcount(f)].push_back(f);
    for (auto& level : by_size) std::sort(level.begin(), level.end());

    // boundary ranks: ranks[s] = rank of the map from size-s faces to
    // size-(s-1) faces
    std::vector<long long> ranks(max_size + 2, 0);
    for (int s = 1; s <= max_size; ++s) {
        const auto& rows = by_size[s - 1];
        const auto& cols = by_size[s];
        if (rows.empty() || cols.empty()) continue;
        auto row_index = [&rows](std::uint32_t mask) {
            auto it = std::lower_bound(rows.begin(), rows.end(), mask);
            return it != rows.end() && *it == mask ? static_cast<int>(it - rows.begin()) : -1;
        };
        if (field == Field::GF2) {
            std::vector<std::vector<int>> columns;
            columns.reserve(cols.size());
            for (std::uint32_t f : cols) {
                std::vector<int> entries;
                std::uint32_t rest = f;
                while (rest) {
                    std::uint32_t bit = rest & (~rest + 1u);
                    int r = row_index(f ^ bit);
                    if (r >= 0) entries.push_back(r);
                    rest ^= bit;
                }
                columns.push_back(std::move(entries));
            }
            ranks[s] = rank_gf2(static_cast<int>(rows.size()), columns);
        } else {
            std::vector<std::vector<std::pair<int, int>>> columns;
            columns.reserve(cols.size());
            for (std::uint32_t f : cols) {
                std::vector<std::pair<int, int>> entries;
                int sign = 1;
                std::uint32_t rest = f;
                while (rest) {
                    std::uint32_t bit = rest & (~rest + 1u);
                    int r = row_index(f ^ bit);
                    if (r >= 0) entries.emplace_back(r, sign);
                    sign = -sign;
                    rest ^= bit;
                }
                columns.push_back(std::move(entries));
            }
            ranks[s] = rank_rational(static_cast<int>(rows.size()), columns);
        }
    }

    std::vector<long long> h(max_size + 1, 0);
    for (int s = 0; s <= max_size; ++s)
        h[s] = static_cast<long long>(by_size[s].size()) - ranks[s] - ranks[s + 1];
    return h;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex, Field field) {
    return reduced_ranks_by_size(complex.faces(), field);
}

}  // namespace oreg
