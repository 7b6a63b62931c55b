#include "shellar/census.hpp"

#include <algorithm>
#include <bit>

namespace shellar {

namespace {

using Words = std::vector<std::uint64_t>;

int first_bit(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
  return -1;
}

bool any_bit(const Words& w) {
  for (auto x : w)
    if (x) return true;
  return false;
}

int popcount(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

void clique_extend(const Graph& g, Words cand, int size, int max_size,
                   CliqueCensus& out) {
  while (true) {
    int v = first_bit(cand);
    if (v < 0) return;
    cand[v / 64] &= ~(1ULL << (v % 64));
    ++out.counts[size + 1];
    ++out.total;
    if (max_size == 0 || size + 1 < max_size) {
      Words next(cand);
      const Words& row = g.row(v + 1);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] &= row[i];
      if (any_bit(next)) clique_extend(g, std::move(next), size + 1, max_size, out);
    }
  }
}

void bron_kerbosch(const Graph& g, Words r_set, Words p, Words x,
                   std::vector<Face>& out) {
  if (!any_bit(p) && !any_bit(x)) {
    Face clique;
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((r_set[v / 64] >> (v % 64)) & 1ULL) clique.push_back(v + 1);
    out.push_back(std::move(clique));
    return;
  }
  // pivot: vertex of P union X with most neighbors in P
  int pivot = -1, best = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool in_px = ((p[v / 64] | x[v / 64]) >> (v % 64)) & 1ULL;
    if (!in_px) continue;
    Words tmp(p);
    const Words& row = g.row(v + 1);
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] &= row[i];
    int c = popcount(tmp);
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  Words candidates(p);
  if (pivot >= 0) {
    const Words& row = g.row(pivot + 1);
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] &= ~row[i];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!((candidates[v / 64] >> (v % 64)) & 1ULL)) continue;
    const Words& row = g.row(v + 1);
    Words r2(r_set), p2(p), x2(x);
    r2[v / 64] |= 1ULL << (v % 64);
    for (std::size_t i = 0; i < p2.size(); ++i) {
      p2[i] &= row[i];
      x2[i] &= row[i];
    }
    bron_kerbosch(g, std::move(r2), std::move(p2), std::move(x2), out);
    p[v / 64] &= ~(1ULL << (v % 64));
    x[v / 64] |= 1ULL << (v % 64);
  }
}

}  // namespace

CliqueCensus enumerate_cliques(const Graph& g, int max_size) {
  if (max_size < 0) fail(ErrorKind::Domain, "enumerate_cliques: negative max_size");
  CliqueCensus out;
  int n = g.vertex_count();
  if (n == 0) return out;
  Words all(g.words(), 0);
  for (int v = 0; v < n; ++v) all[v / 64] |= 1ULL << (v % 64);
  clique_extend(g, all, 0, max_size, out);
  return out;
}

std::vector<Face> maximal_cliques(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Face> out;
  if (n == 0) return out;
  Words r_set(g.words(), 0), p(g.words(), 0), x(g.words(), 0);
  for (int v = 0; v < n; ++v) p[v / 64] |= 1ULL << (v % 64);
  bron_kerbosch(g, r_set, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (const Face& f : maximal_cliques(g))
    best = std::max(best, static_cast<int>(f.size()));
  return best;
}

}  // namespace shellar
