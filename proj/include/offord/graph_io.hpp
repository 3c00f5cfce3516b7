#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "offord/graph.hpp"

namespace offord {

std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph from_graph6(std::string_view text);

// {"n": 4, "edges": [[0, 1], [1, 2]]}
nlohmann::json to_edge_json(const Graph& g);
Graph from_edge_json(const nlohmann::json& j);

// Reads a whole graph file. The format is picked from the first non-blank,
// non-comment content: '{' means the JSON edge list, "bipartite" the
// biadjacency text format, anything else one graph6 line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

}  // namespace offord
