#pragma once

#include <map>
#include <string>
#include <vector>

#include "oreg/ideal.hpp"

namespace oreg {

// Labeled hypergraph H(I) = (V, X, E, edges) of a squarefree monomial
// ideal: vertices 1..mu are the minimal generators in canonical order,
// E(x) = { j : x divides f_j }, the edge set is the family of distinct
// nonempty images, and each edge's label collects the variables mapping to
// it. The labels partition X.
struct LabeledHypergraph {
    int vertex_count = 0;                              // mu = |G(I)|
    std::vector<Monomial> generators;                  // vertex j is generators[j-1]
    std::vector<std::string> x_variables;              // X, in variable order
    std::map<std::string, std::vector<int>> edge_map;  // E(x), sorted, 1-based
    std::vector<std::vector<int>> edges;               // distinct images, sorted
    std::vector<std::vector<std::string>> labels;      // parallel to edges
};

// Throws NotSquarefree / ZeroIdeal.
LabeledHypergraph build_labeled_hypergraph(const MonomialIdeal& ideal);

// Edges of size >= 2 with no proper nonempty subedge.
std::vector<std::vector<int>> simple_edges(const LabeledHypergraph& h);

// Vertices v with {v} not an edge.
std::vector<int> open_vertices(const LabeledHypergraph& h);

// Every open vertex lies in exactly one simple edge.
bool has_isolated_simple_edges(const LabeledHypergraph& h);

// reg(R/I) = |X| - |V| + sum over simple edges of (|F| - 1). Requires the
// isolated-simple-edge property; throws PreconditionFailed otherwise.
int reg_via_simple_edges(const LabeledHypergraph& h);

}  // namespace oreg
