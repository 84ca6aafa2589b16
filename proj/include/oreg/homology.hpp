#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oreg/simplicial.hpp"

namespace oreg {

// Coefficient field for homology ranks. GF2 runs on bit matrices; Rational
// runs exact fraction-free elimination on arbitrary-precision integers.
enum class Field { GF2, Rational };

std::string field_name(Field f);

// Ranks of reduced homology, indexed from dimension -1 upward (entry 0 is
// the rank in dimension -1). The void complex yields an empty list; the
// irrelevant complex {[]} yields {1}.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex, Field field);

// Same computation on a raw face list (bitmasks, including the empty face
// when present). Entry s of the result is dim of reduced homology in
// dimension s-1.
std::vector<long long> reduced_ranks_by_size(const std::vector<std::uint32_t>& faces,
                                             Field field);

}  // namespace oreg
