#include "oreg/families.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace oreg::families {

namespace {

std::vector<Vertex> indexed_names(const std::string& stem, int first, int last) {
    std::vector<Vertex> out;
    for (int i = first; i <= last; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

std::map<Vertex, int> zip_weights(const std::vector<Vertex>& vertices,
                                  const std::vector<int>& weights) {
    if (vertices.size() != weights.size())
        throw LengthMismatch(std::to_string(weights.size()) + " weights for " +
                             std::to_string(vertices.size()) + " vertices");
    std::map<Vertex, int> out;
    for (size_t i = 0; i < vertices.size(); ++i) out[vertices[i]] = weights[i];
    return out;
}

void cycle_edges(const std::vector<Vertex>& ring, std::vector<DirectedEdge>& edges) {
    for (size_t i = 0; i + 1 < ring.size(); ++i) edges.emplace_back(ring[i], ring[i + 1]);
    edges.emplace_back(ring.back(), ring.front());
}

}  // namespace

WeightedOrientedGraph naturally_oriented_path(int length, const std::vector<int>& weights) {
    if (length < 1) throw BadParameters("path length must be at least 1");
    auto vertices = indexed_names("x", 0, length);
    std::vector<DirectedEdge> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(vertices[i], vertices[i + 1]);
    return WeightedOrientedGraph(vertices, zip_weights(vertices, weights), edges);
}

WeightedOrientedGraph naturally_oriented_cycle(int length, const std::vector<int>& weights) {
    if (length < 3) throw BadParameters("cycle length must be at least 3");
    auto vertices = indexed_names("x", 1, length);
    std::vector<DirectedEdge> edges;
    cycle_edges(vertices, edges);
    return WeightedOrientedGraph(vertices, zip_weights(vertices, weights), edges);
}

WeightedOrientedGraph dumbbell(int n, int m, int r, const std::vector<int>& weights) {
    if (n < 3 || m < 3 || r < 1) throw BadParameters("need n, m >= 3 and r >= 1");
    auto xs = indexed_names("x", 1, n);
    auto zs = indexed_names("z", 1, r - 1);
    auto ys = indexed_names("y", 1, m);
    std::vector<Vertex> vertices = xs;
    vertices.insert(vertices.end(), zs.begin(), zs.end());
    vertices.insert(vertices.end(), ys.begin(), ys.end());

    std::vector<DirectedEdge> edges;
    cycle_edges(xs, edges);
    Vertex prev = xs.front();
    for (const auto& z : zs) {
        edges.emplace_back(prev, z);
        prev = z;
    }
    edges.emplace_back(prev, ys.front());
    cycle_edges(ys, edges);
    return WeightedOrientedGraph(vertices, zip_weights(vertices, weights), edges);
}

WeightedOrientedGraph cycle_with_chords(int n, const std::vector<DirectedEdge>& chords,
                                        const std::vector<int>& weights) {
    WeightedOrientedGraph base = naturally_oriented_cycle(n, weights);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<DirectedEdge> edges = base.edges();
    for (const auto& [a, b] : chords) {
        if (!base.has_vertex(a) || !base.has_vertex(b))
            throw UndeclaredVertex("chord endpoint outside the cycle");
        auto key = std::minmax(a, b);
        if (base.has_edge(a, b) || base.has_edge(b, a))
            throw DuplicateChord("(" + a + "," + b + ") lies on the cycle");
        if (!seen.insert(key).second)
            throw DuplicateChord("(" + a + "," + b + ") repeats a diagonal");
        edges.emplace_back(a, b);
    }
    return WeightedOrientedGraph(base.vertices(), base.weights(), edges);
}

WeightedOrientedGraph join_of_cycles(int n, int m, const std::vector<DirectedEdge>& cross_edges,
                                     const std::vector<int>& weights) {
    if (n < 3 || m < 3) throw BadParameters("cycle lengths must be at least 3");
    if (cross_edges.empty()) throw BadParameters("need at least one cross edge");
    if (cross_edges.size() > static_cast<size_t>(n) * static_cast<size_t>(m))
        throw BadParameters("more cross edges than vertex pairs");
    auto xs = indexed_names("x", 1, n);
    auto ys = indexed_names("y", 1, m);
    std::vector<Vertex> vertices = xs;
    vertices.insert(vertices.end(), ys.begin(), ys.end());
    std::set<Vertex> x_side(xs.begin(), xs.end());
    std::set<Vertex> y_side(ys.begin(), ys.end());

    std::vector<DirectedEdge> edges;
    cycle_edges(xs, edges);
    cycle_edges(ys, edges);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [a, b] : cross_edges) {
        bool ax = x_side.count(a), bx = x_side.count(b);
        bool ay = y_side.count(a), by = y_side.count(b);
        if (!((ax && by) || (ay && bx)))
            throw BadCrossEdge("(" + a + "," + b + ") does not join the two cycles");
        if (!seen.insert(std::minmax(a, b)).second)
            throw BadCrossEdge("(" + a + "," + b + ") repeats a pair");
        edges.emplace_back(a, b);
    }
    return WeightedOrientedGraph(vertices, zip_weights(vertices, weights), edges);
}

std::pair<WeightedOrientedGraph, WeightedOrientedGraph> complete_mpartite(
    const std::vector<int>& part_sizes, const std::vector<int>& weights) {
    int m = static_cast<int>(part_sizes.size());
    if (m < 3) throw TooFewParts("need at least 3 parts");
    for (int s : part_sizes)
        if (s < 1) throw BadParameters("every part needs at least one vertex");

    std::vector<std::vector<Vertex>> parts(m);
    std::vector<Vertex> vertices;
    for (int i = 0; i < m; ++i) {
        for (int j = 1; j <= part_sizes[i]; ++j)
            parts[i].push_back("x" + std::to_string(j) + "_" + std::to_string(i + 1));
        vertices.insert(vertices.end(), parts[i].begin(), parts[i].end());
    }
    auto wmap = zip_weights(vertices, weights);

    std::vector<DirectedEdge> full_edges;
    std::vector<DirectedEdge> spanning_edges;
    for (int i = 0; i < m; ++i) {
        const auto& from = parts[i];
        const auto& to = parts[(i + 1) % m];
        for (const auto& a : from)
            for (const auto& b : to) full_edges.emplace_back(a, b);
        int ni = static_cast<int>(from.size());
        int nj = static_cast<int>(to.size());
        if (ni < nj) {
            for (int j = 0; j < ni; ++j) spanning_edges.emplace_back(from[j], to[j]);
            for (int j = ni; j < nj; ++j) spanning_edges.emplace_back(from[0], to[j]);
        } else {
            for (int j = 0; j < nj; ++j) spanning_edges.emplace_back(from[j], to[j]);
        }
    }
    return {WeightedOrientedGraph(vertices, wmap, full_edges),
            WeightedOrientedGraph(vertices, wmap, spanning_edges)};
}

namespace {

WeightedOrientedGraph sink_family(int length, const std::vector<int>& heavy_positions,
                                  const std::vector<int>& weights, bool cycle) {
    if (cycle && length < 3) throw BadParameters("cycle length must be at least 3");
    if (!cycle && length < 1) throw BadParameters("path length must be at least 1");
    int first = cycle ? 1 : 0;
    int last = cycle ? length : length;
    auto vertices = indexed_names("x", first, last);
    std::set<int> heavy(heavy_positions.begin(), heavy_positions.end());
    for (int p : heavy)
        if (p < first || p > last) throw BadParameters("position " + std::to_string(p));
    for (int p : heavy) {
        int next = p + 1;
        if (cycle && next > last) next = first;
        if (next <= last && heavy.count(next) && next != p)
            throw InfeasibleSinkPlacement("positions " + std::to_string(p) + " and " +
                                          std::to_string(next) +
                                          " are adjacent; both cannot be sinks");
    }
    if (vertices.size() != weights.size())
        throw LengthMismatch(std::to_string(weights.size()) + " weights for " +
                             std::to_string(vertices.size()) + " vertices");
    for (size_t i = 0; i < vertices.size(); ++i) {
        int pos = first + static_cast<int>(i);
        bool is_heavy = heavy.count(pos) > 0;
        if (is_heavy && weights[i] < 2)
            throw BadParameters("position " + std::to_string(pos) + " needs weight >= 2");
        if (!is_heavy && weights[i] != 1)
            throw BadParameters("position " + std::to_string(pos) + " must have weight 1");
    }

    // orient into the heavy vertices; everything else left to right
    auto orient = [&heavy, first](int a, int b) -> std::pair<int, int> {
        if (heavy.count(b)) return {a, b};
        if (heavy.count(a)) return {b, a};
        return {a, b};
    };
    std::vector<DirectedEdge> edges;
    auto name = [&vertices, first](int pos) { return vertices[pos - first]; };
    for (int p = first; p < last; ++p) {
        auto [a, b] = orient(p, p + 1);
        edges.emplace_back(name(a), name(b));
    }
    if (cycle) {
        auto [a, b] = orient(last, first);
        edges.emplace_back(name(a), name(b));
    }
    return WeightedOrientedGraph(vertices, zip_weights(vertices, weights), edges);
}

}  // namespace

WeightedOrientedGraph sink_path(int length, const std::vector<int>& heavy_positions,
                                const std::vector<int>& weights) {
    return sink_family(length, heavy_positions, weights, false);
}

WeightedOrientedGraph sink_cycle(int length, const std::vector<int>& heavy_positions,
                                 const std::vector<int>& weights) {
    return sink_family(length, heavy_positions, weights, true);
}

WeightedOrientedGraph random_property_p(std::uint64_t seed, int vertex_count, int weight_cap) {
    if (vertex_count < 2) throw BadParameters("need at least two vertices");
    if (weight_cap < 2) throw BadParameters("weight cap must be at least 2");
    std::mt19937_64 rng(seed);
    auto vertices = indexed_names("v", 0, vertex_count - 1);
    std::vector<DirectedEdge> edges;
    std::vector<int> parent(vertex_count, -1);
    for (int i = 1; i < vertex_count; ++i) {
        parent[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        edges.emplace_back(vertices[parent[i]], vertices[i]);
    }
    // every vertex beyond the root has exactly one in-edge; leaves of the
    // tree keep weight freedom, deeper vertices entered from a non-leaf must
    // weigh at least 2
    std::vector<int> degree(vertex_count, 0);
    for (int i = 1; i < vertex_count; ++i) {
        ++degree[i];
        ++degree[parent[i]];
    }
    std::map<Vertex, int> weights;
    for (int i = 0; i < vertex_count; ++i) {
        bool source = parent[i] < 0;
        bool leaf = degree[i] == 1;
        bool entered_from_leaf = parent[i] >= 0 && degree[parent[i]] == 1;
        int w;
        if (!source && !leaf && !entered_from_leaf)
            w = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(weight_cap - 1));
        else
            w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(weight_cap));
        weights[vertices[i]] = w;
    }
    return WeightedOrientedGraph(vertices, weights, edges);
}

WeightedOrientedGraph add_leaf_in_edges(const WeightedOrientedGraph& d, const Vertex& target,
                                        int k) {
    if (k < 0) throw BadParameters("negative edge count");
    if (!d.has_vertex(target)) throw UndeclaredVertex("'" + target + "'");
    std::vector<Vertex> vertices = d.vertices();
    auto weights = d.weights();
    std::vector<DirectedEdge> edges = d.edges();
    std::string stem = "aux";
    while (std::any_of(vertices.begin(), vertices.end(), [&stem](const Vertex& v) {
        return v.rfind(stem, 0) == 0;
    }))
        stem += "_";
    for (int i = 1; i <= k; ++i) {
        Vertex fresh = stem + std::to_string(i);
        vertices.push_back(fresh);
        weights[fresh] = 1;
        edges.emplace_back(fresh, target);
    }
    return WeightedOrientedGraph(vertices, weights, edges);
}

}  // namespace oreg::families
