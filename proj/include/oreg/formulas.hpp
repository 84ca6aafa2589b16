#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oreg/betti.hpp"
#include "oreg/graph.hpp"

namespace oreg {

struct CheckedPrecondition {
    std::string name;
    bool ok = false;
    std::string note;
};

// Regularity in both conventions. Every producer fills both values, related
// by reg(I) = reg(R/I) + 1, so callers never juggle the offset.
struct RegularityResult {
    int reg_ideal = 0;
    int reg_quotient = 0;
    std::string method;  // "Prop3.1", "Thm3.3", "Thm3.10", "Thm4.2", "Thm4.3",
                         // "Thm4.4", "Thm4.5", "Prop3.11", "oracle"
    std::vector<CheckedPrecondition> checked;
};

// reg(I(P_n)) for the path of length n >= 1.
int reg_path_underlying(int length);
// reg(I(C_n)) for the cycle of length n >= 3, by the deletion recursion with
// base cases n = 3, 4.
int reg_cycle_underlying(int length);

// In-degree <= 1 everywhere plus the weight-or-leaf clause gives
// reg(R/I(D)) = sum of weights - |E(D)|. Requires at least one edge and no
// isolated vertices (an isolated vertex adds 1 to the weight sum but nothing
// to the ideal).
RegularityResult reg_property_p(const WeightedOrientedGraph& d);

struct Thm33Check {
    bool ok = false;
    std::vector<CheckedPrecondition> checked;
};

// Conditions under which new oriented edges among property-P components do
// not change the regularity: both endpoints of every new edge weigh >= 2 in
// their components, and no in-neighbor of a head inside its own component is
// a leaf there. Components must have pairwise disjoint vertex sets, each
// with at least one edge and no isolated vertices.
Thm33Check check_thm33_conditions(const std::vector<WeightedOrientedGraph>& components,
                                  const std::vector<DirectedEdge>& new_edges);

// Union of the components plus the new edges, as one graph.
WeightedOrientedGraph assemble_components(const std::vector<WeightedOrientedGraph>& components,
                                          const std::vector<DirectedEdge>& new_edges);

// reg(R/I) of the assembled graph = sum of the per-component values.
RegularityResult reg_with_added_edges(const std::vector<WeightedOrientedGraph>& components,
                                      const std::vector<DirectedEdge>& new_edges);

struct Thm33Decomposition {
    std::vector<WeightedOrientedGraph> components;
    std::vector<DirectedEdge> removed_edges;
};

// Searches edge subsets Y (increasing size, lexicographic within a size) for
// one whose removal splits D into property-P components with every removed
// edge admissible. Throws SearchBudgetExceeded past `max_edges` edges.
std::optional<Thm33Decomposition> discover_thm33_decomposition(
    const WeightedOrientedGraph& d, int max_edges = 16);

// Regularity of D extended by k in-edges from fresh leaf vertices into
// `target`; equals reg(I(D)) for every k. D needs property P, no isolated
// vertices, and weight(target) >= 2.
RegularityResult reg_with_leaf_in_edges(const WeightedOrientedGraph& d, const Vertex& target,
                                        int k);

// The added-star variant across components: every new edge joins distinct
// components and all edges into one component share a single head. The value
// is the sum of the per-component leaf-star values.
RegularityResult reg_multi_component_stars(const std::vector<WeightedOrientedGraph>& components,
                                           const std::vector<DirectedEdge>& new_edges);

enum class PathClassTag { T1, T2 };

struct PathClass {
    PathClassTag tag = PathClassTag::T2;
    // walk from one endpoint to the other, canonically starting at the
    // endpoint declared first
    std::vector<Vertex> order;
    // whether the walk was reversed so that deleting one and three vertices
    // from the tail end stays in T2
    bool renamed = false;
};

// Requires a path underlying graph with every weight->=2 vertex a sink;
// throws NotASinkPath otherwise. T1: both ends weigh >= 2 and consecutive
// heavy vertices sit exactly 3 apart; T2: the rest.
PathClass classify_path(const WeightedOrientedGraph& d);

// Sink paths: reg(I(D)) = reg(I(P_n)) + sum over heavy vertices of (w - 1),
// dropping one minimum-weight heavy vertex in the T1 case.
RegularityResult reg_sink_path(const WeightedOrientedGraph& d);

// Sink cycles: reg(I(D)) = reg(I(C_n)) + sum over heavy vertices of (w - 1).
RegularityResult reg_sink_cycle(const WeightedOrientedGraph& d);

struct DispatchOptions {
    bool allow_oracle = true;
    OracleOptions oracle;
    int thm33_edge_cap = 16;
};

// Tries, in order: the property-P formula, the leaf-star pattern, the
// discovered component decomposition, sink paths, sink cycles, then the
// homology oracle when allowed. Throws NoApplicableMethod when everything
// fails. The result records which preconditions were probed.
RegularityResult dispatch_regularity(const WeightedOrientedGraph& d,
                                     const DispatchOptions& opts = {});

// Forces one method: auto|prop31|thm33|thm310|path|cycle|oracle.
RegularityResult evaluate_with_method(const WeightedOrientedGraph& d, const std::string& method,
                                      const DispatchOptions& opts = {});

}  // namespace oreg
