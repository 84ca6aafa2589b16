#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oreg/graph.hpp"

namespace oreg::families {

// Path x0 -> x1 -> ... -> xn of length n >= 1; weights listed per vertex.
WeightedOrientedGraph naturally_oriented_path(int length, const std::vector<int>& weights);

// Cycle x1 -> x2 -> ... -> xn -> x1 of length n >= 3.
WeightedOrientedGraph naturally_oriented_cycle(int length, const std::vector<int>& weights);

// Two naturally oriented cycles x1..xn and y1..ym joined by the naturally
// oriented path x1 -> z1 -> ... -> z_{r-1} -> y1. Weights listed in the
// order x1..xn, z1..z_{r-1}, y1..ym.
WeightedOrientedGraph dumbbell(int n, int m, int r, const std::vector<int>& weights);

// Naturally oriented cycle plus oriented diagonals. A chord whose endpoints
// form a cycle edge, or a repeated chord pair, is rejected.
WeightedOrientedGraph cycle_with_chords(int n, const std::vector<DirectedEdge>& chords,
                                        const std::vector<int>& weights);

// Two disjoint naturally oriented cycles x1..xn and y1..ym plus oriented
// cross edges, each joining the two sides. Weights in the order x's then
// y's.
WeightedOrientedGraph join_of_cycles(int n, int m, const std::vector<DirectedEdge>& cross_edges,
                                     const std::vector<int>& weights);

// Oriented multipartite graph whose blocks are the complete bipartite
// graphs V_i -> V_{i+1} (cyclically), plus the spanning subgraph with
// exactly one in-edge per vertex built by the matching-plus-fan rule: a fan
// from the first vertex when the next part is larger, a truncated matching
// otherwise. Vertex j of part i is named "x{j}_{i}"; weights in part order.
std::pair<WeightedOrientedGraph, WeightedOrientedGraph> complete_mpartite(
    const std::vector<int>& part_sizes, const std::vector<int>& weights);

// Path of length n whose weight->=2 vertices sit at the given 0-based
// positions, each oriented into from both sides; remaining edges run left to
// right. Positions must be pairwise nonadjacent. Weights must be >= 2
// exactly at the given positions.
WeightedOrientedGraph sink_path(int length, const std::vector<int>& heavy_positions,
                                const std::vector<int>& weights);

// Cycle variant; positions are 1-based vertex indices and adjacency wraps
// around.
WeightedOrientedGraph sink_cycle(int length, const std::vector<int>& heavy_positions,
                                 const std::vector<int>& weights);

// Deterministic pseudo-random in-tree: every vertex beyond the first hangs
// off an earlier one, so in-degrees stay <= 1 and nothing is isolated.
// Weights are drawn so the weight-or-leaf clause always holds.
WeightedOrientedGraph random_property_p(std::uint64_t seed, int vertex_count, int weight_cap);

// D plus k in-edges into `target` from fresh leaf vertices.
WeightedOrientedGraph add_leaf_in_edges(const WeightedOrientedGraph& d, const Vertex& target,
                                        int k);

}  // namespace oreg::families
