#pragma once

#include <cstdint>
#include <map>

#include "shellar/graph.hpp"

namespace shellar {

struct CliqueCensus {
  std::map<int, std::uint64_t> counts;  // size -> k_t(G), nonzero sizes only
  std::uint64_t total = 0;              // k(G)

  std::uint64_t count(int t) const {
    auto it = counts.find(t);
    return it == counts.end() ? 0 : it->second;
  }
};

// Exact per-size clique tallies; every clique counted once.
CliqueCensus enumerate_cliques(const Graph& g, int max_size = 0);

// Maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
// sorted lexicographically. Isolated vertices appear as singletons.
std::vector<Face> maximal_cliques(const Graph& g);

int clique_number(const Graph& g);

}  // namespace shellar
