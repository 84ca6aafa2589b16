#pragma once

#include <optional>
#include <string>

#include "oreg/graph.hpp"
#include "oreg/ideal.hpp"

namespace oreg::io {

// One parsed input file: either a graph ({"vertices", "weights", "edges"})
// or an ideal ({"variables", "generators"}).
struct Input {
    std::optional<WeightedOrientedGraph> graph;
    std::optional<MonomialIdeal> ideal;
};

Input read_input_file(const std::string& path);

// Requires the file to hold a graph.
WeightedOrientedGraph graph_from_file(const std::string& path);

// Accepts either kind; a graph is turned into its edge ideal.
MonomialIdeal ideal_from_file(const std::string& path);

std::string graph_to_json(const WeightedOrientedGraph& d);

WeightedOrientedGraph parse_graph_json(const std::string& text);
MonomialIdeal parse_ideal_json(const std::string& text);

// RFC 4180: quote fields containing commas, quotes, or newlines.
std::string csv_field(const std::string& value);

}  // namespace oreg::io
