#include "oreg/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oreg/ideal.hpp"

namespace oreg {

namespace {

int weight_sum(const WeightedOrientedGraph& d) {
    int sum = 0;
    for (const auto& v : d.vertices()) sum += d.weight(v);
    return sum;
}

RegularityResult from_quotient(int reg_quotient, std::string method,
                               std::vector<CheckedPrecondition> checked) {
    RegularityResult r;
    r.reg_quotient = reg_quotient;
    r.reg_ideal = reg_quotient + 1;
    r.method = std::move(method);
    r.checked = std::move(checked);
    return r;
}

RegularityResult from_ideal(int reg_ideal, std::string method,
                            std::vector<CheckedPrecondition> checked) {
    RegularityResult r;
    r.reg_ideal = reg_ideal;
    r.reg_quotient = reg_ideal - 1;
    r.method = std::move(method);
    r.checked = std::move(checked);
    return r;
}

}  // namespace

int reg_path_underlying(int length) {
    if (length < 1) throw NonPositiveLength("path length " + std::to_string(length));
    return (length + 2) / 3 + 1;
}

int reg_cycle_underlying(int length) {
    if (length < 3) throw LengthTooSmall("cycle length " + std::to_string(length));
    if (length == 3 || length == 4) return 2;
    // deleting a vertex leaves the path of length n - 2
    int path = reg_path_underlying(length - 2);
    return length % 3 == 2 ? path + 1 : path;
}

RegularityResult reg_property_p(const WeightedOrientedGraph& d) {
    if (d.edges().empty()) throw EmptyEdgeSet("the formula needs at least one edge");
    std::vector<CheckedPrecondition> checked;
    PropertyPResult p = has_property_p(d);
    checked.push_back({"propertyP", p.holds, p.holds ? "" : p.detail});
    if (!p.holds) throw PreconditionFailed("propertyP", p.detail);
    bool no_isolated = !d.has_isolated_vertex();
    checked.push_back({"noIsolatedVertices", no_isolated,
                       no_isolated ? "" : "isolated vertices inflate the weight sum"});
    if (!no_isolated)
        throw PreconditionFailed("noIsolatedVertices",
                                 "the weight sum counts isolated vertices the ideal never sees");
    int quotient = weight_sum(d) - static_cast<int>(d.edges().size());
    return from_quotient(quotient, "Prop3.1", std::move(checked));
}

Thm33Check check_thm33_conditions(const std::vector<WeightedOrientedGraph>& components,
                                  const std::vector<DirectedEdge>& new_edges) {
    Thm33Check result;
    result.ok = true;
    auto fail = [&result](const std::string& name, const std::string& note) {
        result.checked.push_back({name, false, note});
        result.ok = false;
    };
    auto pass = [&result](const std::string& name) {
        result.checked.push_back({name, true, ""});
    };

    std::map<Vertex, int> owner;
    for (size_t t = 0; t < components.size(); ++t)
        for (const auto& v : components[t].vertices()) {
            auto [it, inserted] = owner.emplace(v, static_cast<int>(t));
            if (!inserted)
                throw OverlappingComponents("vertex '" + v + "' appears in components " +
                                            std::to_string(it->second) + " and " +
                                            std::to_string(t));
        }

    if (components.empty()) {
        fail("componentsNonEmpty", "no components given");
        return result;
    }
    for (size_t t = 0; t < components.size(); ++t) {
        const auto& comp = components[t];
        std::string tag = "component" + std::to_string(t);
        if (comp.edges().empty()) {
            fail(tag + ":hasEdge", "component has no edges");
            continue;
        }
        if (comp.has_isolated_vertex()) {
            fail(tag + ":noIsolatedVertices", "component has an isolated vertex");
            continue;
        }
        PropertyPResult p = has_property_p(comp);
        if (!p.holds)
            fail(tag + ":propertyP", p.detail);
        else
            pass(tag + ":propertyP");
    }
    for (const auto& [tail, head] : new_edges) {
        std::string tag = "edge(" + tail + "," + head + ")";
        auto to = owner.find(tail);
        auto ho = owner.find(head);
        if (to == owner.end() || ho == owner.end())
            throw UndeclaredVertex("new edge endpoint outside every component");
        const auto& tail_comp = components[to->second];
        const auto& head_comp = components[ho->second];
        if (tail_comp.weight(tail) < 2) {
            fail(tag + ":tailWeight", "w(" + tail + ") = 1 in its component");
            continue;
        }
        if (head_comp.weight(head) < 2) {
            fail(tag + ":headWeight", "w(" + head + ") = 1 in its component");
            continue;
        }
        bool leaf_in = false;
        for (const auto& u : head_comp.in_neighbors(head))
            if (head_comp.is_leaf(u)) {
                fail(tag + ":noLeafIntoHead",
                     "'" + u + "' is a leaf entering '" + head + "' in its component");
                leaf_in = true;
                break;
            }
        if (!leaf_in) pass(tag);
    }
    return result;
}

WeightedOrientedGraph assemble_components(const std::vector<WeightedOrientedGraph>& components,
                                          const std::vector<DirectedEdge>& new_edges) {
    std::vector<Vertex> vertices;
    std::map<Vertex, int> weights;
    std::vector<DirectedEdge> edges;
    for (const auto& comp : components) {
        for (const auto& v : comp.vertices()) {
            vertices.push_back(v);
            weights[v] = comp.weight(v);
        }
        edges.insert(edges.end(), comp.edges().begin(), comp.edges().end());
    }
    edges.insert(edges.end(), new_edges.begin(), new_edges.end());
    return WeightedOrientedGraph(std::move(vertices), std::move(weights), std::move(edges));
}

RegularityResult reg_with_added_edges(const std::vector<WeightedOrientedGraph>& components,
                                      const std::vector<DirectedEdge>& new_edges) {
    Thm33Check check = check_thm33_conditions(components, new_edges);
    if (!check.ok) {
        for (const auto& c : check.checked)
            if (!c.ok) throw PreconditionFailed(c.name, c.note);
    }
    int quotient = 0;
    for (const auto& comp : components)
        quotient += weight_sum(comp) - static_cast<int>(comp.edges().size());
    return from_quotient(quotient, "Thm3.3", std::move(check.checked));
}

std::optional<Thm33Decomposition> discover_thm33_decomposition(const WeightedOrientedGraph& d,
                                                               int max_edges) {
    int e = static_cast<int>(d.edges().size());
    if (e > max_edges)
        throw SearchBudgetExceeded(std::to_string(e) + " edges exceeds the cap of " +
                                   std::to_string(max_edges));

    // Only edges whose endpoints keep weight >= 2 can be removed, so restrict
    // the subset search to those.
    std::vector<int> candidates;
    for (int i = 0; i < e; ++i) {
        const auto& [tail, head] = d.edges()[i];
        if (d.weight(tail) >= 2 && d.weight(head) >= 2) candidates.push_back(i);
    }

    auto attempt = [&d](const std::vector<int>& chosen) -> std::optional<Thm33Decomposition> {
        std::vector<DirectedEdge> removed;
        for (int i : chosen) removed.push_back(d.edges()[i]);
        WeightedOrientedGraph rest = d.delete_edges(removed);
        std::vector<WeightedOrientedGraph> components;
        for (const auto& part : rest.weakly_connected_components()) {
            WeightedOrientedGraph comp = rest.induced_subgraph(part);
            if (comp.edges().empty()) return std::nullopt;  // stray vertex
            components.push_back(std::move(comp));
        }
        Thm33Check check = check_thm33_conditions(components, removed);
        if (!check.ok) return std::nullopt;
        return Thm33Decomposition{std::move(components), std::move(removed)};
    };

    // subsets by increasing size, lexicographic within a size
    size_t c = candidates.size();
    for (size_t size = 0; size <= c; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> chosen;
            for (int idx : pick) chosen.push_back(candidates[idx]);
            if (auto found = attempt(chosen)) return found;
            // next combination
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pick[i] == static_cast<int>(c - size + i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < static_cast<int>(size); ++j) pick[j] = pick[j - 1] + 1;
        }
        if (size == c) break;
    }
    return std::nullopt;
}

RegularityResult reg_with_leaf_in_edges(const WeightedOrientedGraph& d, const Vertex& target,
                                        int k) {
    if (k < 0) throw BadParameters("negative edge count");
    std::vector<CheckedPrecondition> checked;
    PropertyPResult p = has_property_p(d);
    checked.push_back({"propertyP", p.holds, p.holds ? "" : p.detail});
    if (!p.holds) throw PreconditionFailed("propertyP", p.detail);
    if (d.edges().empty()) throw EmptyEdgeSet("the formula needs at least one edge");
    if (d.has_isolated_vertex())
        throw PreconditionFailed("noIsolatedVertices", "base graph has an isolated vertex");
    bool heavy = d.weight(target) >= 2;
    checked.push_back({"targetWeight", heavy, heavy ? "" : "w(" + target + ") = 1"});
    if (!heavy)
        throw PreconditionFailed("targetWeight", "w(" + target + ") must be at least 2");
    checked.push_back({"leafEdgesAdded", true, "k = " + std::to_string(k)});
    int ideal = weight_sum(d) - static_cast<int>(d.edges().size()) + 1;
    return from_ideal(ideal, "Thm3.10", std::move(checked));
}

RegularityResult reg_multi_component_stars(const std::vector<WeightedOrientedGraph>& components,
                                           const std::vector<DirectedEdge>& new_edges) {
    Thm33Check check = check_thm33_conditions(components, new_edges);
    if (!check.ok)
        for (const auto& c : check.checked)
            if (!c.ok) throw PreconditionFailed(c.name, c.note);

    std::map<Vertex, int> owner;
    for (size_t t = 0; t < components.size(); ++t)
        for (const auto& v : components[t].vertices()) owner[v] = static_cast<int>(t);

    std::map<int, std::set<Vertex>> heads_by_component;
    for (const auto& [tail, head] : new_edges) {
        if (owner[tail] == owner[head])
            throw PreconditionFailed("distinctComponents",
                                     "edge (" + tail + "," + head + ") stays inside one component");
        heads_by_component[owner[head]].insert(head);
    }
    for (const auto& [t, heads] : heads_by_component)
        if (heads.size() > 1)
            throw PreconditionFailed("singleTargetPerComponent",
                                     "component " + std::to_string(t) +
                                         " receives edges at several vertices");

    // Per component, the incoming star keeps the value of the component
    // itself, so the sum telescopes to the same total as the edge-addition
    // formula.
    int quotient = 0;
    for (const auto& comp : components)
        quotient += weight_sum(comp) - static_cast<int>(comp.edges().size());
    RegularityResult direct = reg_with_added_edges(components, new_edges);
    if (direct.reg_quotient != quotient)
        throw PreconditionFailed("componentSum", "component sum disagrees with the direct value");
    RegularityResult r = from_quotient(quotient, "Prop3.11", std::move(check.checked));
    return r;
}

namespace {

bool t1_positions(const std::vector<int>& heavy, int length) {
    if (heavy.empty()) return false;
    if (heavy.front() != 0 || heavy.back() != length) return false;
    for (size_t i = 1; i < heavy.size(); ++i)
        if (heavy[i] - heavy[i - 1] != 3) return false;
    return true;
}

}  // namespace

PathClass classify_path(const WeightedOrientedGraph& d) {
    std::vector<Vertex> order;
    if (!d.underlying().is_path(&order))
        throw NotASinkPath("the underlying graph is not a path");
    for (const auto& v : d.v_plus())
        if (!d.is_sink(v))
            throw NotASinkPath("heavy vertex '" + v + "' is not a sink");

    std::map<Vertex, int> declared;
    for (size_t i = 0; i < d.vertices().size(); ++i) declared[d.vertices()[i]] = static_cast<int>(i);
    if (declared[order.back()] < declared[order.front()])
        std::reverse(order.begin(), order.end());

    int length = static_cast<int>(order.size()) - 1;
    std::vector<int> heavy;
    for (int i = 0; i <= length; ++i)
        if (d.weight(order[i]) >= 2) heavy.push_back(i);

    PathClass pc;
    pc.order = order;
    pc.tag = t1_positions(heavy, length) ? PathClassTag::T1 : PathClassTag::T2;
    pc.renamed = false;
    if (pc.tag == PathClassTag::T2 && length >= 4) {
        // choose the tail end so that dropping one and three vertices stays
        // in T2
        auto in_t2_after_trim = [&heavy](int new_length) {
            std::vector<int> kept;
            for (int p : heavy)
                if (p <= new_length) kept.push_back(p);
            return !t1_positions(kept, new_length);
        };
        if (!in_t2_after_trim(length - 1) || !in_t2_after_trim(length - 3)) {
            pc.renamed = true;
            std::reverse(pc.order.begin(), pc.order.end());
        }
    }
    return pc;
}

RegularityResult reg_sink_path(const WeightedOrientedGraph& d) {
    PathClass pc;
    try {
        pc = classify_path(d);
    } catch (const NotASinkPath& e) {
        throw PreconditionFailed("sinkPath", e.what());
    }
    int length = static_cast<int>(pc.order.size()) - 1;
    int base = reg_path_underlying(length);
    std::vector<CheckedPrecondition> checked;
    checked.push_back({"sinkPath", true,
                       std::string(pc.tag == PathClassTag::T1 ? "T1" : "T2") +
                           (pc.renamed ? ", end renamed" : "")});

    auto heavy = d.v_plus();
    int extra = 0;
    for (const auto& v : heavy) extra += d.weight(v) - 1;
    if (pc.tag == PathClassTag::T2)
        return from_ideal(base + extra, "Thm4.2", std::move(checked));

    // T1: drop one minimum-weight heavy vertex, first in declared order on
    // ties
    Vertex drop = heavy.front();
    for (const auto& v : heavy)
        if (d.weight(v) < d.weight(drop)) drop = v;
    checked.push_back({"minWeightChoice", true, "dropped '" + drop + "'"});
    return from_ideal(base + extra - (d.weight(drop) - 1), "Thm4.3", std::move(checked));
}

RegularityResult reg_sink_cycle(const WeightedOrientedGraph& d) {
    std::vector<Vertex> order;
    if (!d.underlying().is_cycle(&order))
        throw PreconditionFailed("NotASinkCycle", "the underlying graph is not a cycle");
    for (const auto& v : d.v_plus())
        if (!d.is_sink(v))
            throw PreconditionFailed("NotASinkCycle", "heavy vertex '" + v + "' is not a sink");
    int n = static_cast<int>(order.size());
    int base = reg_cycle_underlying(n);
    int extra = 0;
    for (const auto& v : d.v_plus()) extra += d.weight(v) - 1;
    std::vector<CheckedPrecondition> checked{{"sinkCycle", true, "n = " + std::to_string(n)}};
    return from_ideal(base + extra, n % 3 == 2 ? "Thm4.5" : "Thm4.4", std::move(checked));
}

namespace {

// D minus a maximal set of leaf in-edges at one vertex, when the remainder
// has property P: the leaf-star pattern.
std::optional<RegularityResult> try_leaf_star(const WeightedOrientedGraph& d) {
    for (const auto& p : d.vertices()) {
        if (d.weight(p) < 2) continue;
        auto in = d.in_neighbors(p);
        std::vector<Vertex> leaves;
        for (const auto& u : in)
            if (d.is_leaf(u)) leaves.push_back(u);
        if (leaves.empty()) continue;
        size_t non_leaf_in = in.size() - leaves.size();
        if (non_leaf_in > 1) continue;
        std::vector<Vertex> removed = leaves;
        if (non_leaf_in == 0) removed.erase(removed.begin());  // keep one in-edge
        if (removed.empty()) continue;

        std::set<Vertex> gone(removed.begin(), removed.end());
        std::vector<Vertex> keep;
        for (const auto& v : d.vertices())
            if (!gone.count(v)) keep.push_back(v);
        WeightedOrientedGraph base = d.induced_subgraph(keep);
        if (base.edges().empty() || base.has_isolated_vertex()) continue;
        if (base.weight(p) < 2) continue;
        if (!has_property_p(base).holds) continue;

        int ideal = weight_sum(base) - static_cast<int>(base.edges().size()) + 1;
        std::vector<CheckedPrecondition> checked{
            {"leafStarPattern", true,
             "target '" + p + "', " + std::to_string(removed.size()) + " leaf in-edges"},
            {"propertyP", true, "holds for the base graph"}};
        return from_ideal(ideal, "Thm3.10", std::move(checked));
    }
    return std::nullopt;
}

RegularityResult oracle_result(const WeightedOrientedGraph& d, const DispatchOptions& opts) {
    MonomialIdeal ideal = edge_ideal(d);
    int reg = regularity_oracle(ideal, opts.oracle);
    std::vector<CheckedPrecondition> checked{
        {"oracle", true, field_name(opts.oracle.field)}};
    return from_ideal(reg, "oracle", std::move(checked));
}

}  // namespace

RegularityResult dispatch_regularity(const WeightedOrientedGraph& d,
                                     const DispatchOptions& opts) {
    if (d.edges().empty()) throw EmptyEdgeSet("regularity of an edgeless graph");
    std::vector<CheckedPrecondition> trail;

    try {
        RegularityResult r = reg_property_p(d);
        r.checked.insert(r.checked.begin(), trail.begin(), trail.end());
        return r;
    } catch (const PreconditionFailed& e) {
        trail.push_back({"prop31", false, e.reason()});
    }

    if (auto star = try_leaf_star(d)) {
        star->checked.insert(star->checked.begin(), trail.begin(), trail.end());
        return *star;
    }
    trail.push_back({"thm310", false, "no leaf-star pattern"});

    try {
        if (auto decomp = discover_thm33_decomposition(d, opts.thm33_edge_cap)) {
            RegularityResult r =
                reg_with_added_edges(decomp->components, decomp->removed_edges);
            r.checked.insert(r.checked.begin(), trail.begin(), trail.end());
            return r;
        }
        trail.push_back({"thm33", false, "no admissible edge subset"});
    } catch (const SearchBudgetExceeded& e) {
        trail.push_back({"thm33", false, e.what()});
    }

    try {
        RegularityResult r = reg_sink_path(d);
        r.checked.insert(r.checked.begin(), trail.begin(), trail.end());
        return r;
    } catch (const PreconditionFailed& e) {
        trail.push_back({"sinkPath", false, e.reason()});
    }

    try {
        RegularityResult r = reg_sink_cycle(d);
        r.checked.insert(r.checked.begin(), trail.begin(), trail.end());
        return r;
    } catch (const PreconditionFailed& e) {
        trail.push_back({"sinkCycle", false, e.reason()});
    }

    if (opts.allow_oracle) {
        try {
            RegularityResult r = oracle_result(d, opts);
            r.checked.insert(r.checked.begin(), trail.begin(), trail.end());
            return r;
        } catch (const TooLarge& e) {
            throw NoApplicableMethod(std::string("formulas failed and ") + e.what());
        }
    }
    throw NoApplicableMethod("no formula applies and the oracle is disallowed");
}

RegularityResult evaluate_with_method(const WeightedOrientedGraph& d, const std::string& method,
                                      const DispatchOptions& opts) {
    if (method == "auto") return dispatch_regularity(d, opts);
    if (method == "prop31") return reg_property_p(d);
    if (method == "thm310") {
        if (auto star = try_leaf_star(d)) return *star;
        // plain property-P graphs are the k = 0 case
        try {
            RegularityResult r = reg_property_p(d);
            r.method = "Thm3.10";
            return r;
        } catch (const PreconditionFailed&) {
            throw PreconditionFailed("leafStarPattern", "no vertex matches the leaf-star pattern");
        }
    }
    if (method == "thm33") {
        auto decomp = discover_thm33_decomposition(d, opts.thm33_edge_cap);
        if (!decomp)
            throw PreconditionFailed("thm33Decomposition", "no admissible edge subset found");
        return reg_with_added_edges(decomp->components, decomp->removed_edges);
    }
    if (method == "path") return reg_sink_path(d);
    if (method == "cycle") return reg_sink_cycle(d);
    if (method == "oracle") {
        if (d.edges().empty()) throw EmptyEdgeSet("regularity of an edgeless graph");
        return oracle_result(d, opts);
    }
    throw BadParameters("unknown method '" + method + "'");
}

}  // namespace oreg
