#include "shellar/enumerate.hpp"

#include <unordered_set>

#include "shellar/iso.hpp"

namespace shellar {

namespace {

// Does S (a vertex subset of g) contain a clique of size q?
bool subset_has_clique(const Graph& g, const std::vector<int>& s, int q,
                       std::size_t start, std::vector<int>& current) {
  if (static_cast<int>(current.size()) == q) return true;
  for (std::size_t i = start; i < s.size(); ++i) {
    bool ok = true;
    for (int v : current)
      if (!g.has_edge(v, s[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(s[i]);
    if (subset_has_clique(g, s, q, i + 1, current)) {
      current.pop_back();
      return true;
    }
    current.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const EnumOptions& opts,
                                    std::uint64_t* scanned) {
  if (n < 1) fail(ErrorKind::Domain, "enumerate_graphs: n must be >= 1");
  if (n > 16) fail(ErrorKind::Domain, "enumerate_graphs: n > 16 not supported");
  std::uint64_t examined = 0;
  std::vector<Graph> level = {Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (++examined > opts.budget)
          fail(ErrorKind::Budget,
               "enumerate_graphs: budget exceeded after examining " +
                   std::to_string(examined - 1) + " candidates at level " +
                   std::to_string(k + 1));
        std::vector<int> nbrs;
        for (int v = 0; v < k; ++v)
          if ((mask >> v) & 1u) nbrs.push_back(v + 1);
        if (opts.max_degree >= 0) {
          if (static_cast<int>(nbrs.size()) > opts.max_degree) continue;
          bool over = false;
          for (int v : nbrs)
            if (g.degree(v) + 1 > opts.max_degree) {
              over = true;
              break;
            }
          if (over) continue;
        }
        if (opts.max_omega >= 1 && static_cast<int>(nbrs.size()) >= opts.max_omega) {
          std::vector<int> cur;
          if (subset_has_clique(g, nbrs, opts.max_omega, 0, cur)) continue;
        }
        Graph h(k + 1);
        for (int u = 1; u <= k; ++u)
          for (int v = u + 1; v <= k; ++v)
            if (g.has_edge(u, v)) h.add_edge(u, v);
        for (int v : nbrs) h.add_edge(v, k + 1);
        std::string key = canonical_graph6(h);
        if (seen.insert(std::move(key)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  if (scanned) *scanned = examined;
  return level;
}

std::vector<Graph> enumerate_connected_graphs(int n, const EnumOptions& opts,
                                              std::uint64_t* scanned) {
  std::vector<Graph> all = enumerate_graphs(n, opts, scanned);
  std::vector<Graph> out;
  for (Graph& g : all)
    if (g.is_connected()) out.push_back(std::move(g));
  return out;
}

}  // namespace shellar
