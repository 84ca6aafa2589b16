#include "oreg/graph.hpp"

#include <algorithm>
#include <set>

namespace oreg {

namespace {

std::map<Vertex, int> build_index(const std::vector<Vertex>& vertices) {
    std::map<Vertex, int> index;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        auto [it, inserted] = index.emplace(vertices[i], i);
        if (!inserted) throw DuplicateVertex("vertex '" + vertices[i] + "' declared twice");
    }
    return index;
}

}  // namespace

SimpleGraph::SimpleGraph(std::vector<Vertex> vertices,
                         std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)) {
    index_ = build_index(vertices_);
    adjacency_.assign(vertices_.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        int ia = index_of(a);
        int ib = index_of(b);
        if (ia == ib) throw SelfLoop("edge {" + a + "," + a + "}");
        auto key = std::minmax(ia, ib);
        if (!seen.insert(key).second) continue;  // merge duplicates
        adjacency_[ia].push_back(ib);
        adjacency_[ib].push_back(ia);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    for (const auto& [ia, ib] : seen)
        edges_.emplace_back(vertices_[ia], vertices_[ib]);
}

int SimpleGraph::index_of(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw UndeclaredVertex("'" + v + "'");
    return it->second;
}

bool SimpleGraph::has_vertex(const Vertex& v) const { return index_.count(v) > 0; }

bool SimpleGraph::has_edge(const Vertex& a, const Vertex& b) const {
    int ia = index_of(a);
    int ib = index_of(b);
    return std::binary_search(adjacency_[ia].begin(), adjacency_[ia].end(), ib);
}

int SimpleGraph::degree(const Vertex& v) const {
    return static_cast<int>(adjacency_[index_of(v)].size());
}

std::vector<Vertex> SimpleGraph::neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int i : adjacency_[index_of(v)]) out.push_back(vertices_[i]);
    return out;
}

bool SimpleGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool SimpleGraph::is_path(std::vector<Vertex>* order) const {
    size_t n = vertices_.size();
    if (n < 2 || edges_.size() != n - 1 || !is_connected()) return false;
    std::vector<int> ends;
    for (size_t i = 0; i < n; ++i) {
        size_t deg = adjacency_[i].size();
        if (deg == 1) ends.push_back(static_cast<int>(i));
        else if (deg != 2) return false;
    }
    if (ends.size() != 2) return false;
    if (order) {
        order->clear();
        int prev = -1, cur = ends[0];
        for (size_t step = 0; step < n; ++step) {
            order->push_back(vertices_[cur]);
            int next = -1;
            for (int w : adjacency_[cur])
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
    }
    return true;
}

bool SimpleGraph::is_cycle(std::vector<Vertex>* order) const {
    size_t n = vertices_.size();
    if (n < 3 || edges_.size() != n || !is_connected()) return false;
    for (size_t i = 0; i < n; ++i)
        if (adjacency_[i].size() != 2) return false;
    if (order) {
        order->clear();
        int prev = -1, cur = 0;
        for (size_t step = 0; step < n; ++step) {
            order->push_back(vertices_[cur]);
            int next = adjacency_[cur][0] == prev ? adjacency_[cur][1] : adjacency_[cur][0];
            prev = cur;
            cur = next;
        }
    }
    return true;
}

WeightedOrientedGraph::WeightedOrientedGraph(std::vector<Vertex> vertices,
                                             std::map<Vertex, int> weights,
                                             std::vector<DirectedEdge> edges)
    : vertices_(std::move(vertices)) {
    index_ = build_index(vertices_);
    weight_.assign(vertices_.size(), 1);
    for (const auto& [v, w] : weights) {
        auto it = index_.find(v);
        if (it == index_.end()) throw UndeclaredVertex("weight given for '" + v + "'");
        if (w < 1) throw NonPositiveWeight("w(" + v + ") = " + std::to_string(w));
        weight_[it->second] = w;
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    std::set<std::pair<int, int>> seen;
    for (const auto& [tail, head] : edges) {
        int it = index_of(tail);
        int ih = index_of(head);
        if (it == ih) throw SelfLoop("edge (" + tail + "," + head + ")");
        if (!seen.insert({it, ih}).second)
            throw DuplicateEdge("(" + tail + "," + head + ")");
        out_[it].push_back(ih);
        in_[ih].push_back(it);
        edges_.emplace_back(tail, head);
    }
    for (auto& adj : out_) std::sort(adj.begin(), adj.end());
    for (auto& adj : in_) std::sort(adj.begin(), adj.end());
    // Sources (and isolated vertices) always carry weight 1. A source is a
    // vertex with N(x) = N+(x), so an antiparallel partner does not stop the
    // reset.
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (std::includes(out_[i].begin(), out_[i].end(), in_[i].begin(), in_[i].end()))
            weight_[i] = 1;
}

int WeightedOrientedGraph::index_of(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw UndeclaredVertex("'" + v + "'");
    return it->second;
}

int WeightedOrientedGraph::weight(const Vertex& v) const { return weight_[index_of(v)]; }

std::map<Vertex, int> WeightedOrientedGraph::weights() const {
    std::map<Vertex, int> out;
    for (size_t i = 0; i < vertices_.size(); ++i) out[vertices_[i]] = weight_[i];
    return out;
}

bool WeightedOrientedGraph::has_vertex(const Vertex& v) const { return index_.count(v) > 0; }

bool WeightedOrientedGraph::has_edge(const Vertex& tail, const Vertex& head) const {
    int it = index_of(tail);
    int ih = index_of(head);
    return std::binary_search(out_[it].begin(), out_[it].end(), ih);
}

std::vector<Vertex> WeightedOrientedGraph::in_neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int i : in_[index_of(v)]) out.push_back(vertices_[i]);
    return out;
}

std::vector<Vertex> WeightedOrientedGraph::out_neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    for (int i : out_[index_of(v)]) out.push_back(vertices_[i]);
    return out;
}

std::vector<Vertex> WeightedOrientedGraph::neighbors(const Vertex& v) const {
    int iv = index_of(v);
    std::vector<int> merged;
    std::set_union(in_[iv].begin(), in_[iv].end(), out_[iv].begin(), out_[iv].end(),
                   std::back_inserter(merged));
    std::vector<Vertex> out;
    for (int i : merged) out.push_back(vertices_[i]);
    return out;
}

bool WeightedOrientedGraph::is_leaf(const Vertex& v) const { return degree(v) == 1; }

bool WeightedOrientedGraph::is_source(const Vertex& v) const {
    int iv = index_of(v);
    // N(v) = N+(v) iff every in-neighbor is also an out-neighbor.
    return std::includes(out_[iv].begin(), out_[iv].end(), in_[iv].begin(), in_[iv].end());
}

bool WeightedOrientedGraph::is_sink(const Vertex& v) const {
    int iv = index_of(v);
    return std::includes(in_[iv].begin(), in_[iv].end(), out_[iv].begin(), out_[iv].end());
}

bool WeightedOrientedGraph::is_isolated(const Vertex& v) const {
    int iv = index_of(v);
    return in_[iv].empty() && out_[iv].empty();
}

bool WeightedOrientedGraph::has_isolated_vertex() const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (in_[i].empty() && out_[i].empty()) return true;
    return false;
}

std::vector<Vertex> WeightedOrientedGraph::v_plus() const {
    std::vector<Vertex> out;
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (weight_[i] >= 2) out.push_back(vertices_[i]);
    return out;
}

SimpleGraph WeightedOrientedGraph::underlying() const {
    std::vector<std::pair<Vertex, Vertex>> undirected(edges_.begin(), edges_.end());
    return SimpleGraph(vertices_, undirected);
}

WeightedOrientedGraph WeightedOrientedGraph::induced_subgraph(
    const std::vector<Vertex>& keep) const {
    std::set<int> kept;
    for (const auto& v : keep) kept.insert(index_of(v));
    std::vector<Vertex> vs;
    std::map<Vertex, int> ws;
    for (int i : kept) {
        vs.push_back(vertices_[i]);
        ws[vertices_[i]] = weight_[i];
    }
    std::vector<DirectedEdge> es;
    for (const auto& [tail, head] : edges_)
        if (kept.count(index_.at(tail)) && kept.count(index_.at(head)))
            es.emplace_back(tail, head);
    return WeightedOrientedGraph(std::move(vs), std::move(ws), std::move(es));
}

WeightedOrientedGraph WeightedOrientedGraph::delete_edges(
    const std::vector<DirectedEdge>& remove) const {
    std::set<std::pair<int, int>> removed;
    for (const auto& [tail, head] : remove) {
        int it = index_of(tail);
        int ih = index_of(head);
        if (!has_edge(tail, head)) throw UnknownEdge("(" + tail + "," + head + ")");
        removed.insert({it, ih});
    }
    std::vector<DirectedEdge> es;
    for (const auto& [tail, head] : edges_)
        if (!removed.count({index_.at(tail), index_.at(head)}))
            es.emplace_back(tail, head);
    return WeightedOrientedGraph(vertices_, weights(), std::move(es));
}

std::vector<std::vector<Vertex>> WeightedOrientedGraph::weakly_connected_components() const {
    std::vector<int> comp(vertices_.size(), -1);
    int count = 0;
    for (size_t start = 0; start < vertices_.size(); ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack = {static_cast<int>(start)};
        comp[start] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& adj : {out_[v], in_[v]})
                for (int w : adj)
                    if (comp[w] == -1) {
                        comp[w] = count;
                        stack.push_back(w);
                    }
        }
        ++count;
    }
    std::vector<std::vector<Vertex>> result(count);
    for (size_t i = 0; i < vertices_.size(); ++i) result[comp[i]].push_back(vertices_[i]);
    return result;
}

bool WeightedOrientedGraph::operator==(const WeightedOrientedGraph& other) const {
    return vertices_ == other.vertices_ && weight_ == other.weight_ &&
           std::set<DirectedEdge>(edges_.begin(), edges_.end()) ==
               std::set<DirectedEdge>(other.edges_.begin(), other.edges_.end());
}

PropertyPResult has_property_p(const WeightedOrientedGraph& d) {
    PropertyPResult result;
    for (const auto& v : d.vertices()) {
        auto in = d.in_neighbors(v);
        if (in.size() > 1) {
            result.holds = false;
            result.witness = v;
            result.clause = "inDegree";
            result.detail = "vertex '" + v + "' has " + std::to_string(in.size()) +
                            " in-edges";
            return result;
        }
    }
    for (const auto& v : d.vertices()) {
        if (d.is_leaf(v) || d.is_source(v)) continue;
        if (d.weight(v) >= 2) continue;
        // Non-source, so the in-neighborhood is nonempty; in-degree <= 1 held
        // above, so it is a single vertex.
        auto in = d.in_neighbors(v);
        if (in.empty() || !d.is_leaf(in.front())) {
            result.holds = false;
            result.witness = v;
            result.clause = "weightOrLeaf";
            result.detail = "vertex '" + v + "' has weight 1 and its in-neighbor" +
                            (in.empty() ? std::string(" is missing")
                                        : " '" + in.front() + "' is not a leaf");
            return result;
        }
    }
    result.holds = true;
    return result;
}

}  // namespace oreg
