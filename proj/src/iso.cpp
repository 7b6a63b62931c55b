#include "shellar/iso.hpp"

#include <algorithm>
#include <map>

#include "shellar/graph6.hpp"

namespace shellar {

namespace {

// Equitable refinement: recolor by (current color, multiset of neighbor
// colors) until stable. New color ids follow the lexicographic order of
// signatures, so the previous color order is preserved.
void refine(const Graph& g, std::vector<int>& color) {
  int n = g.vertex_count();
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nbr;
      for (int u : g.neighbors(v + 1)) nbr.push_back(color[u - 1]);
      std::sort(nbr.begin(), nbr.end());
      sig[v].insert(sig[v].end(), nbr.begin(), nbr.end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids[sig[v]] = 0;
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = ids[sig[v]];
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed) return;
  }
}

std::string adjacency_string(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::string s;
  s.reserve(n * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      s.push_back(g.has_edge(order[i] + 1, order[j] + 1) ? '1' : '0');
  return s;
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  std::vector<int> best_order;
  bool have = false;

  void descend(std::vector<int> color) {
    refine(g, color);
    int n = g.vertex_count();
    // smallest non-singleton color class
    int target = -1;
    std::vector<int> count(n, 0);
    for (int c : color) ++count[c];
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[color[v]] = v;
      std::string s = adjacency_string(g, order);
      if (!have || s < best) {
        best = s;
        best_order = order;
        have = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> next(color);
      for (int u = 0; u < n; ++u)
        next[u] = 2 * color[u] + (u == v ? 0 : 1);
      descend(std::move(next));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return g;
  CanonSearch search{g, {}, {}, false};
  search.descend(std::vector<int>(n, 0));
  Graph out(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (search.best[j * (j - 1) / 2 + i] == '1') out.add_edge(i + 1, j + 1);
  return out;
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace shellar
