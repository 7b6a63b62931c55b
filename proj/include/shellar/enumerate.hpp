#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shellar/graph.hpp"

namespace shellar {

struct EnumOptions {
  int max_degree = -1;         // -1: unbounded
  int max_omega = -1;          // -1: unbounded; else forbid K_{max_omega+1}
  std::uint64_t budget = 100000000ULL;  // candidate graphs examined
};

// All graphs on exactly n vertices up to isomorphism satisfying the
// (hereditary) constraints, by vertex augmentation with canonical-form
// deduplication at every level. Throws Error(Budget) when the number of
// candidates examined exceeds the budget.
std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opts,
                                    std::uint64_t* scanned = nullptr);

std::vector<Graph> enumerate_connected_graphs(int n, const EnumOptions& opts,
                                              std::uint64_t* scanned = nullptr);

}  // namespace shellar
