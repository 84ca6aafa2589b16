#pragma once

#include <cstdint>
#include <vector>

#include "oreg/ideal.hpp"

namespace oreg {

// Finite simplicial complex on vertices 0..n-1, faces stored as sorted
// bitmasks. The void complex (no faces at all) and the irrelevant complex
// (just the empty face) are distinct values.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<std::uint32_t> faces);

    static SimplicialComplex void_complex(int vertex_count);
    static SimplicialComplex irrelevant(int vertex_count);
    static SimplicialComplex full_simplex(int vertex_count);
    static SimplicialComplex from_facets(int vertex_count,
                                         const std::vector<std::uint32_t>& facets);

    int vertex_count() const { return n_; }
    const std::vector<std::uint32_t>& faces() const { return faces_; }
    bool is_void() const { return faces_.empty(); }
    bool is_face(std::uint32_t mask) const;
    // -1 for the irrelevant complex; -2 for the void complex.
    int dimension() const;

private:
    int n_ = 0;
    std::vector<std::uint32_t> faces_;  // sorted ascending
};

// Faces are the subsets of the variable set containing no generator
// support. The zero ideal yields the full simplex. Throws NotSquarefree,
// UnitIdeal, and TooLarge past 20 variables (the face list is explicit).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

}  // namespace oreg
