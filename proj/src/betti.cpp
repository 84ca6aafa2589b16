#include "oreg/betti.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "oreg/parallel.hpp"

namespace oreg {

long long BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
    if (entries.empty()) throw ZeroIdeal("regularity of an empty Betti table");
    int best = std::numeric_limits<int>::min();
    for (const auto& [cell, count] : entries)
        if (count != 0) best = std::max(best, cell.second - cell.first);
    return best;
}

BettiTable BettiTable::to_ideal() const {
    BettiTable out;
    out.subject = Subject::Ideal;
    out.field = field;
    for (const auto& [cell, count] : entries)
        if (cell.first >= 1 && count != 0) out.entries[{cell.first - 1, cell.second}] = count;
    return out;
}

namespace {

struct SweepInput {
    int n = 0;                              // polarized support variables
    std::vector<std::uint32_t> gens;        // generator supports as masks
};

// Polarize when needed and restrict to the support: variables dividing no
// generator are cone points of every induced subcomplex and contribute
// nothing.
SweepInput prepare(const MonomialIdeal& ideal, const OracleOptions& opts) {
    if (ideal.is_zero()) throw ZeroIdeal("Betti numbers of the zero ideal");
    if (ideal.is_unit()) throw UnitIdeal("Betti numbers of the unit ideal");
    const MonomialIdeal* squarefree = &ideal;
    MonomialIdeal polarized = MonomialIdeal::zero(VariableSet{});
    if (!ideal.is_squarefree()) {
        polarized = polarize(ideal).first;
        squarefree = &polarized;
    }
    auto support = squarefree->support();
    SweepInput input;
    input.n = static_cast<int>(support.size());
    if (input.n > opts.max_polar_vars)
        throw TooLarge("needs " + std::to_string(input.n) + " polarized variables, cap is " +
                       std::to_string(opts.max_polar_vars));
    if (input.n > 26) throw TooLarge("the sweep engine is limited to 26 variables");
    std::map<std::string, int> index;
    for (int i = 0; i < input.n; ++i) index[support[i]] = i;
    for (const auto& g : squarefree->generators()) {
        std::uint32_t mask = 0;
        for (const auto& id : g.support()) mask |= 1u << index[id];
        input.gens.push_back(mask);
    }
    return input;
}

// Subsets in which every vertex lies in some generator support contained in
// the subset; these are exactly the unions of generator supports. Everything
// else induces a subcomplex with a cone point.
std::vector<std::uint32_t> relevant_subsets(const SweepInput& input) {
    size_t m = input.gens.size();
    std::set<std::uint32_t> out;
    if (m <= static_cast<size_t>(input.n) && m <= 22) {
        std::vector<std::uint32_t> unions(size_t{1} << m, 0);
        for (std::uint32_t s = 0; s < unions.size(); ++s) {
            if (s == 0) {
                out.insert(0);
                continue;
            }
            std::uint32_t low = s & (~s + 1u);
            unions[s] = unions[s ^ low] | input.gens[__builtin_ctz(low)];
            out.insert(unions[s]);
        }
    } else {
        for (std::uint64_t sigma = 0; sigma < (1ull << input.n); ++sigma) {
            std::uint32_t cover = 0;
            for (std::uint32_t g : input.gens)
                if ((sigma & g) == g) cover |= g;
            if (cover == sigma) out.insert(static_cast<std::uint32_t>(sigma));
        }
    }
    return {out.begin(), out.end()};
}

// h-vector (by face size) of the induced subcomplex on sigma, enumerating
// its faces directly.
std::vector<long long> h_by_direct(std::uint32_t sigma,
                                   const std::vector<std::uint32_t>& gens_inside, Field field) {
    std::vector<std::uint32_t> faces;
    std::uint32_t sub = sigma;
    while (true) {
        bool face = true;
        for (std::uint32_t g : gens_inside)
            if ((sub & g) == g) {
                face = false;
                break;
            }
        if (face) faces.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & sigma;
    }
    return reduced_ranks_by_size(faces, field);
}

// h-vector (by face size) of the nerve of the Alexander-dual cover: the
// dual of the induced subcomplex is the union of the simplices on the
// complements of the generator supports, so its nerve is the family of
// generator subsets whose supports do not cover sigma. Combinatorial
// Alexander duality then gives
//   dim H~_{s-1}(Delta|sigma) = dim H~_{|sigma|-s-2}(nerve).
std::vector<long long> h_by_nerve(std::uint32_t sigma,
                                  const std::vector<std::uint32_t>& gens_inside, Field field) {
    size_t m = gens_inside.size();
    std::vector<std::uint32_t> faces;
    std::vector<std::uint32_t> unions(size_t{1} << m, 0);
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        if (s) {
            std::uint32_t low = s & (~s + 1u);
            unions[s] = unions[s ^ low] | gens_inside[__builtin_ctz(low)];
        }
        if (unions[s] != sigma) faces.push_back(s);
    }
    std::vector<long long> nerve_h = reduced_ranks_by_size(faces, field);
    // translate: h[s] of Delta|sigma = nerve_h[|sigma| - s - 1]
    int size = __builtin_popcount(sigma);
    std::vector<long long> h(size + 1, 0);
    for (int s = 0; s <= size; ++s) {
        int t = size - s - 1;
        if (t >= 0 && t < static_cast<int>(nerve_h.size())) h[s] = nerve_h[t];
    }
    return h;
}

}  // namespace

BettiTable graded_betti_quotient(const MonomialIdeal& ideal, const OracleOptions& opts) {
    SweepInput input = prepare(ideal, opts);
    std::vector<std::uint32_t> sigmas = relevant_subsets(input);

    int threads = opts.threads > 0 ? opts.threads : default_thread_count();
    size_t chunk_count =
        std::min<size_t>(threads, std::max<size_t>(1, sigmas.size() / 16));
    std::vector<std::map<std::pair<int, int>, long long>> partial(
        std::max<size_t>(1, chunk_count));

    parallel_chunks(sigmas.size(), static_cast<int>(chunk_count),
                    [&](size_t chunk, size_t begin, size_t end) {
        auto& table = partial[chunk];
        for (size_t idx = begin; idx < end; ++idx) {
            std::uint32_t sigma = sigmas[idx];
            if (sigma == 0) {
                // induced subcomplex {[]}: dim H~_{-1} = 1
                table[{0, 0}] += 1;
                continue;
            }
            int size = __builtin_popcount(sigma);
            std::vector<std::uint32_t> inside;
            for (std::uint32_t g : input.gens)
                if ((sigma & g) == g) inside.push_back(g);
            std::vector<long long> h =
                static_cast<int>(inside.size()) <= size
                    ? h_by_nerve(sigma, inside, opts.field)
                    : h_by_direct(sigma, inside, opts.field);
            for (int s = 0; s < static_cast<int>(h.size()); ++s)
                if (h[s] != 0) table[{size - s, size}] += h[s];
        }
    });

    BettiTable out;
    out.subject = BettiTable::Subject::Quotient;
    out.field = opts.field;
    for (const auto& table : partial)
        for (const auto& [cell, count] : table)
            if (count != 0) out.entries[cell] += count;
    return out;
}

BettiTable graded_betti(const MonomialIdeal& ideal, const OracleOptions& opts) {
    return graded_betti_quotient(ideal, opts).to_ideal();
}

int regularity_oracle(const MonomialIdeal& ideal, const OracleOptions& opts) {
    return graded_betti(ideal, opts).regularity();
}

int regularity_oracle_quotient(const MonomialIdeal& ideal, const OracleOptions& opts) {
    return graded_betti_quotient(ideal, opts).regularity();
}

SplittingReport betti_splitting_check(const MonomialIdeal& whole, const MonomialIdeal& left,
                                      const MonomialIdeal& right, const OracleOptions& opts) {
    if (left.is_zero() || right.is_zero())
        throw NotAPartition("both parts must be nonempty");
    std::set<Monomial> lg(left.generators().begin(), left.generators().end());
    std::set<Monomial> rg(right.generators().begin(), right.generators().end());
    std::set<Monomial> wg(whole.generators().begin(), whole.generators().end());
    std::set<Monomial> merged = lg;
    merged.insert(rg.begin(), rg.end());
    if (merged != wg || lg.size() + rg.size() != wg.size())
        throw NotAPartition("generators of the parts must partition the whole");

    SplittingReport report;
    report.whole = graded_betti(whole, opts);
    report.left = graded_betti(left, opts);
    report.right = graded_betti(right, opts);
    report.meet = graded_betti(ideal_intersection(left, right), opts);

    std::set<std::pair<int, int>> cells;
    for (const auto& [cell, count] : report.whole.entries) cells.insert(cell);
    for (const auto& [cell, count] : report.left.entries) cells.insert(cell);
    for (const auto& [cell, count] : report.right.entries) cells.insert(cell);
    for (const auto& [cell, count] : report.meet.entries)
        cells.insert({cell.first + 1, cell.second});

    report.ok = true;
    for (const auto& [i, j] : cells) {
        long long lhs = report.whole.at(i, j);
        long long rhs = report.left.at(i, j) + report.right.at(i, j) +
                        (i == 0 ? 0 : report.meet.at(i - 1, j));
        if (lhs != rhs) {
            report.ok = false;
            report.violations.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                                        "): " + std::to_string(lhs) +
                                        " != " + std::to_string(rhs));
        }
    }
    return report;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const OracleOptions& opts) {
    if (ideal.is_zero() || ideal.is_unit()) return false;
    int degree = ideal.generators().front().degree();
    for (const auto& g : ideal.generators())
        if (g.degree() != degree) return false;
    return regularity_oracle(ideal, opts) == degree;
}

VariableSplit splitting_condition_check(const MonomialIdeal& ideal, const std::string& pivot,
                                        const OracleOptions& opts) {
    std::vector<Monomial> in, out;
    for (const auto& g : ideal.generators())
        (g.exponent(pivot) > 0 ? in : out).push_back(g);
    VariableSplit split{MonomialIdeal(ideal.variables(), std::move(in)),
                        MonomialIdeal(ideal.variables(), std::move(out)), false, ""};
    if (split.left.is_zero()) {
        split.note = "no generator is divisible by " + pivot;
        return split;
    }
    if (split.right.is_zero()) {
        split.note = "every generator is divisible by " + pivot;
        return split;
    }
    if (!has_linear_resolution(split.left, opts)) {
        split.note = "the divisible part has no linear resolution";
        return split;
    }
    split.applies = true;
    split.note = "divisible part has a linear resolution";
    return split;
}

}  // namespace oreg
