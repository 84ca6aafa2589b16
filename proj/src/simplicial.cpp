#include "oreg/simplicial.hpp"

#include <algorithm>
#include <set>

namespace oreg {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces)
    : n_(vertex_count), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end());
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    const std::uint32_t limit = n_ >= 32 ? 0xffffffffu : ((1u << n_) - 1u);
    for (std::uint32_t f : faces_) {
        if ((f & ~limit) != 0)
            throw BadParameters("face uses a vertex beyond the declared count");
        // downward closure: every facet of a face is a face
        std::uint32_t rest = f;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (!std::binary_search(faces_.begin(), faces_.end(), f ^ bit))
                throw BadParameters("face family is not downward closed");
            rest ^= bit;
        }
    }
}

SimplicialComplex SimplicialComplex::void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {});
}

SimplicialComplex SimplicialComplex::irrelevant(int vertex_count) {
    return SimplicialComplex(vertex_count, {0});
}

SimplicialComplex SimplicialComplex::full_simplex(int vertex_count) {
    if (vertex_count > 20) throw TooLarge("full simplex on more than 20 vertices");
    std::vector<std::uint32_t> faces(1u << vertex_count);
    for (std::uint32_t m = 0; m < faces.size(); ++m) faces[m] = m;
    return SimplicialComplex(vertex_count, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 const std::vector<std::uint32_t>& facets) {
    std::set<std::uint32_t> faces;
    std::vector<std::uint32_t> stack(facets.begin(), facets.end());
    while (!stack.empty()) {
        std::uint32_t f = stack.back();
        stack.pop_back();
        if (!faces.insert(f).second) continue;
        std::uint32_t rest = f;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1u);
            stack.push_back(f ^ bit);
            rest ^= bit;
        }
    }
    return SimplicialComplex(vertex_count,
                             std::vector<std::uint32_t>(faces.begin(), faces.end()));
}

bool SimplicialComplex::is_face(std::uint32_t mask) const {
    return std::binary_search(faces_.begin(), faces_.end(), mask);
}

int SimplicialComplex::dimension() const {
    if (faces_.empty()) return -2;
    int best = -1;
    for (std::uint32_t f : faces_) best = std::max(best, __builtin_popcount(f) - 1);
    return best;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw NotSquarefree("Stanley-Reisner complex");
    if (ideal.is_unit()) throw UnitIdeal("Stanley-Reisner complex of the unit ideal");
    int n = ideal.variables().size();
    if (n > 20) throw TooLarge("explicit face enumeration capped at 20 variables");
    std::vector<std::uint32_t> supports;
    for (const auto& g : ideal.generators()) {
        std::uint32_t mask = 0;
        for (const auto& id : g.support())
            mask |= 1u << ideal.variables().index_of(id);
        supports.push_back(mask);
    }
    std::vector<std::uint32_t> faces;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool face = true;
        for (std::uint32_t g : supports)
            if ((m & g) == g) {
                face = false;
                break;
            }
        if (face) faces.push_back(m);
    }
    return SimplicialComplex(n, std::move(faces));
}

}  // namespace oreg
