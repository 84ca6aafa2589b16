#include "oreg/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace oreg::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

WeightedOrientedGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph file needs \"vertices\" and \"edges\"");
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::map<Vertex, int> weights;
    if (j.contains("weights")) {
        if (!j.at("weights").is_object()) throw ParseError("\"weights\" must be an object");
        for (const auto& [k, v] : j.at("weights").items()) {
            if (!v.is_number_integer()) throw ParseError("weight of '" + k + "' must be an integer");
            weights[k] = v.get<int>();
        }
    }
    std::vector<DirectedEdge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("each edge must be a [tail, head] pair of strings");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return WeightedOrientedGraph(std::move(vertices), std::move(weights), std::move(edges));
}

MonomialIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
        throw ParseError("ideal file needs \"variables\" and \"generators\"");
    VariableSet vars;
    for (const auto& v : j.at("variables")) {
        if (!v.is_string()) throw ParseError("variable ids must be strings");
        vars.add(v.get<std::string>());
    }
    std::vector<Monomial> gens;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw ParseError("generators must be strings like \"x^2*y\"");
        gens.push_back(parse_monomial(g.get<std::string>()));
    }
    return MonomialIdeal(std::move(vars), std::move(gens));
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Input read_input_file(const std::string& path) {
    json j = parse_text(slurp(path));
    Input input;
    if (j.is_object() && j.contains("generators"))
        input.ideal = ideal_from_json(j);
    else
        input.graph = graph_from_json(j);
    return input;
}

WeightedOrientedGraph graph_from_file(const std::string& path) {
    Input input = read_input_file(path);
    if (!input.graph) throw ParseError("'" + path + "' holds an ideal, not a graph");
    return *input.graph;
}

MonomialIdeal ideal_from_file(const std::string& path) {
    Input input = read_input_file(path);
    if (input.ideal) return *input.ideal;
    return edge_ideal(*input.graph);
}

std::string graph_to_json(const WeightedOrientedGraph& d) {
    ordered_json j;
    j["vertices"] = d.vertices();
    ordered_json weights = ordered_json::object();
    for (const auto& v : d.vertices()) weights[v] = d.weight(v);
    j["weights"] = weights;
    ordered_json edges = ordered_json::array();
    for (const auto& [tail, head] : d.edges()) edges.push_back({tail, head});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

WeightedOrientedGraph parse_graph_json(const std::string& text) {
    return graph_from_json(parse_text(text));
}

MonomialIdeal parse_ideal_json(const std::string& text) {
    return ideal_from_json(parse_text(text));
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace oreg::io
