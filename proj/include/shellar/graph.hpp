#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shellar/common.hpp"

namespace shellar {

// Finite simple graph on vertices labeled 1..n. Adjacency is kept as packed
// bit rows so clique kernels can run on word operations.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  std::vector<int> neighbors(int v) const;

  // Packed row of vertex v (1-based); bit (u-1) set iff u ~ v.
  const std::vector<std::uint64_t>& row(int v) const { return adj_[v - 1]; }
  int words() const { return words_; }

  bool is_complete() const;
  bool is_connected() const;

  // Edge-list text format: first line "n m", then m lines "u v".
  static Graph from_edge_list(const std::string& text);
  std::string to_edge_list() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int words_ = 0;
  int edges_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// Generators for the graph families used throughout.
Graph gen_complete(int n);
Graph gen_turan(int n, int r);
Graph gen_colex(int n, long long m);
Graph gen_union_cliques(int a, int r, int b);
Graph gen_circulant(int n, const std::vector<int>& J);
Graph gen_cir_star(int n, int r);
Graph gen_cir_star_star(int n, int r);

// k_t(G) <= C(r,t-1)*n; with t absent (t == 0), k(G) <= 2^r * n.
std::uint64_t folklore_bound(int n, int r, int t);

}  // namespace shellar
