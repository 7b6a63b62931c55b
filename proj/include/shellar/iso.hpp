#pragma once

#include <string>

#include "shellar/graph.hpp"

namespace shellar {

// Canonical labeling by color refinement plus individualization backtracking.
// Intended for desk-scale graphs (n <= 12 or so).
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace shellar
