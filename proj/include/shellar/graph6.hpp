#pragma once

#include <string>

#include "shellar/graph.hpp"

namespace shellar {

// graph6 interchange, n <= 62 (single header byte). Parse errors are
// Error(Parse) with messages distinguishing empty input, bad length,
// out-of-range bytes, trailing garbage, and unsupported sizes.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

}  // namespace shellar
