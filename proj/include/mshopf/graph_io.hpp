#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mshopf/graph.hpp"

namespace mshopf {

struct NamedGraph {
    std::string name;
    AssignedGraph graph;
};

// Graph-spec text format, one declaration per line, '#' comments,
// whitespace-insensitive:
//   graph <name> valence <k>
//   vertex <id>
//   internal <id> <v1> <v2> [scale <i>]
//   external <label> <v>
// External leg order is the order of appearance. A file may hold several
// graph blocks. Throws ParseError.
std::vector<NamedGraph> parse_graph_specs(const std::string& text);
NamedGraph parse_graph_spec(const std::string& text);
std::vector<NamedGraph> load_graph_file(const std::string& path);

std::string to_graph_spec(const AssignedGraph& g, const std::string& name);

// JSON mirror of the graph fields with a deterministic half-edge
// presentation derived from the canonical form: edge e owns half-edges
// 2e (u end) and 2e+1 (v end); leg k owns half-edge 2E+k.
nlohmann::json graph_to_json(const AssignedGraph& g, const std::string& name = "");
AssignedGraph graph_from_json(const nlohmann::json& j);

} // namespace mshopf
