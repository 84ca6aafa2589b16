#include "oreg/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace oreg {

LabeledHypergraph build_labeled_hypergraph(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw ZeroIdeal("labeled hypergraph of the zero ideal");
    if (!ideal.is_squarefree())
        throw NotSquarefree("labeled hypergraph needs a squarefree ideal; polarize first");

    LabeledHypergraph h;
    h.generators = ideal.generators();
    h.vertex_count = static_cast<int>(h.generators.size());

    std::map<std::vector<int>, std::vector<std::string>> by_image;
    for (const auto& id : ideal.variables().ids()) {
        std::vector<int> image;
        for (int j = 0; j < h.vertex_count; ++j)
            if (h.generators[j].exponent(id) > 0) image.push_back(j + 1);
        if (image.empty()) continue;
        h.x_variables.push_back(id);
        h.edge_map[id] = image;
        by_image[image].push_back(id);
    }
    for (auto& [image, label] : by_image) {
        h.edges.push_back(image);
        h.labels.push_back(label);
    }
    return h;
}

std::vector<std::vector<int>> simple_edges(const LabeledHypergraph& h) {
    std::vector<std::vector<int>> out;
    for (const auto& f : h.edges) {
        if (f.size() < 2) continue;
        bool has_proper_subedge = false;
        for (const auto& g : h.edges) {
            if (g.size() >= f.size() || g.empty()) continue;
            if (std::includes(f.begin(), f.end(), g.begin(), g.end())) {
                has_proper_subedge = true;
                break;
            }
        }
        if (!has_proper_subedge) out.push_back(f);
    }
    return out;
}

std::vector<int> open_vertices(const LabeledHypergraph& h) {
    std::set<int> closed;
    for (const auto& f : h.edges)
        if (f.size() == 1) closed.insert(f.front());
    std::vector<int> out;
    for (int v = 1; v <= h.vertex_count; ++v)
        if (!closed.count(v)) out.push_back(v);
    return out;
}

bool has_isolated_simple_edges(const LabeledHypergraph& h) {
    auto simples = simple_edges(h);
    for (int v : open_vertices(h)) {
        int hits = 0;
        for (const auto& f : simples)
            if (std::binary_search(f.begin(), f.end(), v)) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

int reg_via_simple_edges(const LabeledHypergraph& h) {
    if (!has_isolated_simple_edges(h))
        throw PreconditionFailed("isolatedSimpleEdges",
                                 "some open vertex is not in exactly one simple edge");
    int total = static_cast<int>(h.x_variables.size()) - h.vertex_count;
    for (const auto& f : simple_edges(h)) total += static_cast<int>(f.size()) - 1;
    return total;
}

}  // namespace oreg
