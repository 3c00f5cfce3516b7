#pragma once

#include <string>
#include <vector>

#include "offord/graph.hpp"

namespace offord {

// Canonical labeling by individualization and equitable refinement with
// automorphism pruning. label[v] is the new name of vertex v; isomorphic
// graphs get identical relabeled adjacency.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_graph(const Graph& g);

// graph6 string of canonical_graph(g).
std::string canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace offord
