#include "shellar/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace shellar {

Face face_intersect(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Face face_diff(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) fail(ErrorKind::Domain, "vertex count must be non-negative");
  words_ = (n + 63) / 64;
  adj_.assign(n, std::vector<std::uint64_t>(words_, 0));
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    fail(ErrorKind::Domain, "edge endpoint out of range");
  if (u == v) fail(ErrorKind::Domain, "self-loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[u - 1][(v - 1) / 64] |= 1ULL << ((v - 1) % 64);
  adj_[v - 1][(u - 1) / 64] |= 1ULL << ((u - 1) % 64);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adj_[u - 1][(v - 1) / 64] >> ((v - 1) % 64)) & 1ULL;
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : adj_[v - 1]) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

bool Graph::is_complete() const {
  return 2LL * edges_ == static_cast<long long>(n_) * (n_ - 1);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_ + 1, 0);
  std::vector<int> stack = {1};
  seen[1] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n_;
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = -1;
  long long m = -1;
  if (!(in >> n >> m)) fail(ErrorKind::Parse, "edge list: missing \"n m\" header");
  if (n < 0 || m < 0) fail(ErrorKind::Parse, "edge list: negative header values");
  Graph g(n);
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      fail(ErrorKind::Parse, "edge list: expected " + std::to_string(m) +
                                 " edges, got " + std::to_string(i));
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << " " << edges_ << "\n";
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (has_edge(u, v)) out << u << " " << v << "\n";
  return out.str();
}

Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_turan(int n, int r) {
  if (r < 1) fail(ErrorKind::Domain, "gen_turan: r must be >= 1");
  if (n < 1) fail(ErrorKind::Domain, "gen_turan: n must be >= 1");
  // Larger parts get the lowest part indices; vertices assigned in order.
  std::vector<int> part(n + 1, 0);
  int q = n / r, rem = n % r;
  int v = 1;
  for (int p = 0; p < r; ++p) {
    int size = q + (p < rem ? 1 : 0);
    for (int i = 0; i < size; ++i) part[v++] = p;
  }
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int w = u + 1; w <= n; ++w)
      if (part[u] != part[w]) g.add_edge(u, w);
  return g;
}

Graph gen_colex(int n, long long m) {
  if (n < 1) fail(ErrorKind::Domain, "gen_colex: n must be >= 1");
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > total)
    fail(ErrorKind::Domain, "gen_colex: m exceeds pair count");
  Graph g(n);
  long long placed = 0;
  for (int b = 2; b <= n && placed < m; ++b)
    for (int a = 1; a < b && placed < m; ++a) {
      g.add_edge(a, b);
      ++placed;
    }
  return g;
}

Graph gen_union_cliques(int a, int r, int b) {
  if (r < 1) fail(ErrorKind::Domain, "gen_union_cliques: r must be >= 1");
  if (a < 0 || b < 0) fail(ErrorKind::Domain, "gen_union_cliques: negative part");
  int n = a * (r + 1) + b;
  Graph g(n);
  int base = 0;
  for (int c = 0; c < a; ++c) {
    for (int u = 1; u <= r + 1; ++u)
      for (int v = u + 1; v <= r + 1; ++v) g.add_edge(base + u, base + v);
    base += r + 1;
  }
  for (int u = 1; u <= b; ++u)
    for (int v = u + 1; v <= b; ++v) g.add_edge(base + u, base + v);
  return g;
}

Graph gen_circulant(int n, const std::vector<int>& J) {
  if (n < 1) fail(ErrorKind::Domain, "gen_circulant: n must be >= 1");
  Graph g(n);
  for (int j : J) {
    if (j < 1 || j > n / 2) fail(ErrorKind::Domain, "gen_circulant: j outside [floor(n/2)]");
    if (2 * j == n) fail(ErrorKind::Domain, "gen_circulant: j = n/2 is excluded");
    for (int i = 0; i < n; ++i) g.add_edge(i + 1, (i + j) % n + 1);
  }
  return g;
}

Graph gen_cir_star(int n, int r) {
  if (n < 1 || r < 1) fail(ErrorKind::Domain, "gen_cir_star: n, r must be >= 1");
  int half = r / 2;
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n && v - u <= half; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_cir_star_star(int n, int r) {
  if (r % 2 == 0) fail(ErrorKind::Domain, "gen_cir_star_star: r must be odd");
  if (n <= r) fail(ErrorKind::Domain, "gen_cir_star_star: requires n > r");
  Graph g = gen_cir_star(n, r);
  int shift = (n + 1) / 2;
  for (int i = 1; i + shift <= n && i <= n / 2; ++i) g.add_edge(i, i + shift);
  return g;
}

std::uint64_t folklore_bound(int n, int r, int t) {
  if (n < 0 || r < 0) fail(ErrorKind::Domain, "folklore_bound: negative input");
  if (t == 0) return (1ULL << r) * static_cast<std::uint64_t>(n);
  if (t < 1) fail(ErrorKind::Domain, "folklore_bound: t must be >= 1");
  return binom(r, t - 1) * static_cast<std::uint64_t>(n);
}

}  // namespace shellar
