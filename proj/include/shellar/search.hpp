#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "shellar/enumerate.hpp"
#include "shellar/graph.hpp"

namespace shellar {

struct SearchSpec {
  int n = 0;
  int r = 0;
  int t = 0;                    // 0: maximize k(G); else maximize k_t(G)
  bool require_pure = false;
  bool require_connected = true;
  std::uint64_t budget = 100000000ULL;
  int workers = 1;
  bool use_external = false;    // candidates from a graph6 stream
  std::vector<Graph> external;
};

// Exact extremal value over graphs with Delta <= r and shellable clique
// complex, with all extremal witnesses up to isomorphism.
nlohmann::json extremal_f(const SearchSpec& spec);

// Closed forms for Cir*(n,r), r even, n >= m = r/2+1.
std::uint64_t cir_star_clique_count(int n, int r, int t);  // t <= m
std::uint64_t cir_star_total_cliques(int n, int r);

nlohmann::json verify_unique_km_tree(int r, std::uint64_t budget,
                                     int n_override = 0, int facets_override = 0);
nlohmann::json verify_tendril(int n, int r, std::uint64_t budget);
nlohmann::json verify_binom_lemma(int a_max);
nlohmann::json ratio_report(int r, int t, const std::vector<int>& n_values,
                            std::uint64_t budget, bool with_exhaustive);
nlohmann::json verify_classical_bounds(int n_max, std::uint64_t budget);
nlohmann::json odd_explore(int n, int r, std::uint64_t budget);
nlohmann::json scan_large_clique_budget(int n, int r, std::uint64_t budget);

}  // namespace shellar
