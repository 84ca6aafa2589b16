#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oreg/errors.hpp"

namespace oreg {

using Vertex = std::string;
using DirectedEdge = std::pair<Vertex, Vertex>;  // (tail, head)

// Simple graph: the underlying graph of a weighted oriented graph.
// Vertices keep their declared order; edges are unordered pairs stored with
// the lower declared index first.
class SimpleGraph {
public:
    SimpleGraph(std::vector<Vertex> vertices,
                std::vector<std::pair<Vertex, Vertex>> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool has_vertex(const Vertex& v) const;
    bool has_edge(const Vertex& a, const Vertex& b) const;
    int degree(const Vertex& v) const;
    std::vector<Vertex> neighbors(const Vertex& v) const;
    bool is_connected() const;

    // True when the graph is a path of length >= 1; on success fills `order`
    // with the vertices walked from one endpoint to the other.
    bool is_path(std::vector<Vertex>* order = nullptr) const;
    // True when the graph is a cycle; fills `order` with a closed walk
    // starting at the first declared vertex.
    bool is_cycle(std::vector<Vertex>* order = nullptr) const;

private:
    int index_of(const Vertex& v) const;

    std::vector<Vertex> vertices_;
    std::map<Vertex, int> index_;
    std::vector<std::pair<Vertex, Vertex>> edges_;     // canonical order
    std::vector<std::vector<int>> adjacency_;          // by vertex index
};

// Directed graph with positive integer vertex weights. Immutable after
// construction. Construction normalizes the weight of every source vertex
// (and every isolated vertex) to 1, so the edge ideal never depends on a
// weight that cannot occur in a generator.
class WeightedOrientedGraph {
public:
    WeightedOrientedGraph(std::vector<Vertex> vertices,
                          std::map<Vertex, int> weights,
                          std::vector<DirectedEdge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<DirectedEdge>& edges() const { return edges_; }
    int weight(const Vertex& v) const;
    std::map<Vertex, int> weights() const;

    bool has_vertex(const Vertex& v) const;
    bool has_edge(const Vertex& tail, const Vertex& head) const;

    std::vector<Vertex> in_neighbors(const Vertex& v) const;
    std::vector<Vertex> out_neighbors(const Vertex& v) const;
    std::vector<Vertex> neighbors(const Vertex& v) const;
    int degree(const Vertex& v) const { return static_cast<int>(neighbors(v).size()); }

    bool is_leaf(const Vertex& v) const;
    // Isolated vertices are both sources and sinks: degree zero satisfies
    // both set equalities vacuously.
    bool is_source(const Vertex& v) const;
    bool is_sink(const Vertex& v) const;
    bool is_isolated(const Vertex& v) const;
    bool has_isolated_vertex() const;

    // Vertices of weight >= 2.
    std::vector<Vertex> v_plus() const;

    SimpleGraph underlying() const;

    // Keeps exactly the edges with both endpoints in `keep`; vertices that
    // become sources (or isolated) get weight 1.
    WeightedOrientedGraph induced_subgraph(const std::vector<Vertex>& keep) const;
    // Same vertex set, edges minus `remove`; the same source-weight reset
    // rule as induced subgraphs applies.
    WeightedOrientedGraph delete_edges(const std::vector<DirectedEdge>& remove) const;

    // Weakly connected components, each listed in declared vertex order;
    // components ordered by their first vertex.
    std::vector<std::vector<Vertex>> weakly_connected_components() const;

    bool operator==(const WeightedOrientedGraph& other) const;

private:
    int index_of(const Vertex& v) const;

    std::vector<Vertex> vertices_;
    std::map<Vertex, int> index_;
    std::vector<int> weight_;                 // by vertex index
    std::vector<DirectedEdge> edges_;         // declaration order
    std::vector<std::vector<int>> out_;       // by vertex index, sorted
    std::vector<std::vector<int>> in_;
};

// Outcome of the property-P test. On failure `witness` names the offending
// vertex and `clause` which requirement broke: "inDegree" when some vertex
// has two or more in-edges, "weightOrLeaf" when a non-leaf, non-source
// vertex has weight 1 and its unique in-neighbor is not a leaf.
struct PropertyPResult {
    bool holds = false;
    Vertex witness;
    std::string clause;
    std::string detail;
};

// Property P: in-degree at most one everywhere, and every non-leaf,
// non-source vertex either has weight >= 2 or is entered from a leaf.
PropertyPResult has_property_p(const WeightedOrientedGraph& d);

}  // namespace oreg
