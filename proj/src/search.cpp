#include "shellar/search.hpp"

#include <algorithm>
#include <thread>

#include "shellar/census.hpp"
#include "shellar/complex.hpp"
#include "shellar/graph6.hpp"
#include "shellar/iso.hpp"
#include "shellar/kmtree.hpp"
#include "shellar/shelling.hpp"

namespace shellar {

namespace {

using nlohmann::json;

struct CandidateResult {
  bool qualifies = false;
  bool shellable = false;
  bool pure = false;
  std::uint64_t value = 0;
  CliqueCensus census;
  std::string g6;
};

void run_parallel(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

json census_json(const CliqueCensus& c) {
  json counts = json::object();
  for (auto& kv : c.counts) counts[std::to_string(kv.first)] = kv.second;
  return json{{"counts", counts}, {"total", c.total}};
}

}  // namespace

json extremal_f(const SearchSpec& spec) {
  if (spec.n < 1 || spec.r < 1)
    fail(ErrorKind::Domain, "extremal_f: n and r must be >= 1");
  std::uint64_t scanned = 0;
  std::vector<Graph> candidates;
  if (spec.use_external) {
    for (const Graph& g : spec.external) {
      if (g.vertex_count() == spec.n && g.max_degree() <= spec.r)
        candidates.push_back(g);
      if (++scanned > spec.budget)
        fail(ErrorKind::Budget, "extremal_f: external stream exceeds budget");
    }
  } else {
    EnumOptions opts;
    opts.max_degree = spec.r;
    opts.budget = spec.budget;
    candidates = enumerate_graphs(spec.n, opts, &scanned);
  }

  std::vector<CandidateResult> results(candidates.size());
  run_parallel(candidates.size(), spec.workers, [&](std::size_t i) {
    const Graph& g = candidates[i];
    CandidateResult& res = results[i];
    if (spec.require_connected && !g.is_connected()) return;
    SimplicialComplex complex = clique_complex(g);
    auto cert = is_shellable(complex);
    if (!cert) return;
    res.shellable = true;
    res.pure = is_pure(complex);
    if (spec.require_pure && !res.pure) return;
    res.qualifies = true;
    res.census = enumerate_cliques(g);
    res.value = spec.t > 0 ? res.census.count(spec.t) : res.census.total;
    res.g6 = canonical_graph6(g);
  });

  std::uint64_t best = 0;
  std::uint64_t shellable_count = 0, pure_count = 0, classes = 0;
  std::map<int, std::uint64_t> per_t;
  for (const CandidateResult& r : results) {
    ++classes;
    if (r.shellable) ++shellable_count;
    if (r.shellable && r.pure) ++pure_count;
    if (!r.qualifies) continue;
    best = std::max(best, r.value);
    for (auto& kv : r.census.counts)
      per_t[kv.first] = std::max(per_t[kv.first], kv.second);
  }
  std::vector<std::string> witnesses;
  json witness_census = json::object();
  for (const CandidateResult& r : results)
    if (r.qualifies && r.value == best && best > 0) {
      witnesses.push_back(r.g6);
      witness_census[r.g6] = census_json(r.census);
    }
  std::sort(witnesses.begin(), witnesses.end());

  json per_t_json = json::object();
  for (auto& kv : per_t) per_t_json[std::to_string(kv.first)] = kv.second;
  return json{{"n", spec.n},
              {"r", spec.r},
              {"t", spec.t > 0 ? json(spec.t) : json(nullptr)},
              {"require_pure", spec.require_pure},
              {"require_connected", spec.require_connected},
              {"value", best},
              {"witnesses", witnesses},
              {"witness_census", witness_census},
              {"graphs_scanned", scanned},
              {"classes_examined", classes},
              {"shellable_count", shellable_count},
              {"pure_count", pure_count},
              {"per_t", per_t_json}};
}

std::uint64_t cir_star_clique_count(int n, int r, int t) {
  if (r < 2 || r % 2 != 0) fail(ErrorKind::Domain, "cir_star_clique_count: r must be even");
  int m = r / 2 + 1;
  if (t < 1 || t > m) fail(ErrorKind::Domain, "cir_star_clique_count: need 1 <= t <= m");
  if (n < m) fail(ErrorKind::Domain, "cir_star_clique_count: need n >= m");
  std::uint64_t value = binom(m, t) + static_cast<std::uint64_t>(n - m) * binom(m - 1, t - 1);
  // factored form C(m-1,t-1)(m/t + n - m): equivalent since t*C(m,t) = m*C(m-1,t-1)
  if (binom(m, t) * t != binom(m - 1, t - 1) * static_cast<std::uint64_t>(m))
    fail(ErrorKind::Internal, "cir_star_clique_count: algebraic forms disagree");
  return value;
}

std::uint64_t cir_star_total_cliques(int n, int r) {
  if (r < 2 || r % 2 != 0) fail(ErrorKind::Domain, "cir_star_total_cliques: r must be even");
  int m = r / 2 + 1;
  if (n < m) fail(ErrorKind::Domain, "cir_star_total_cliques: need n >= m");
  return (1ULL << m) + static_cast<std::uint64_t>(n - m) * (1ULL << (m - 1)) - 1;
}

json verify_unique_km_tree(int r, std::uint64_t budget, int n_override,
                           int facets_override) {
  if (r < 2 || r % 2 != 0)
    fail(ErrorKind::Domain, "verify_unique_km_tree: r must be even and >= 2");
  int n = n_override > 0 ? n_override : r + 3;
  int target_facets = facets_override > 0 ? facets_override : r / 2 + 3;
  int m = r / 2 + 1;
  EnumOptions opts;
  opts.max_degree = r;
  opts.budget = budget;
  std::uint64_t scanned = 0;
  std::vector<Graph> graphs = enumerate_connected_graphs(n, opts, &scanned);
  std::vector<std::string> classes;
  for (const Graph& g : graphs) {
    SimplicialComplex c = clique_complex(g);
    if (!is_pure(c) || omega(c) != m) continue;
    if (static_cast<int>(c.facets().size()) != target_facets) continue;
    auto cert = is_shellable(c);
    if (!cert || cert->structural_count() > 0) continue;
    classes.push_back(canonical_graph6(g));
  }
  std::sort(classes.begin(), classes.end());
  bool matches = classes.size() == 1 &&
                 classes[0] == canonical_graph6(gen_cir_star(n, r));
  bool in_regime = (n == r + 3) && (target_facets == r / 2 + 3) && r >= 4;
  return json{{"r", r},
              {"n", n},
              {"m", m},
              {"facet_count", target_facets},
              {"class_count", classes.size()},
              {"classes", classes},
              {"matches_cir_star", matches},
              {"default_regime", in_regime},
              {"graphs_scanned", scanned}};
}

json verify_tendril(int n, int r, std::uint64_t budget) {
  if (r < 2 || r % 2 != 0) fail(ErrorKind::Domain, "verify_tendril: r must be even");
  if (n < r + 3) fail(ErrorKind::Domain, "verify_tendril: need n >= r+3");
  int base_n = r + 3;
  int m = r / 2 + 1;
  Graph base = gen_cir_star(base_n, r);

  // Candidate extensions: all graphs on [n] whose edges contain the embedded
  // Cir*(r+3,r); covers every isomorphism class containing it as subcomplex.
  std::vector<std::pair<int, int>> candidate_edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (v <= base_n && base.has_edge(u, v)) continue;
      int du = u <= base_n ? base.degree(u) : 0;
      int dv = v <= base_n ? base.degree(v) : 0;
      if (du >= r || dv >= r) continue;  // saturated in the base
      candidate_edges.emplace_back(u, v);
    }
  if (candidate_edges.size() > 24)
    fail(ErrorKind::Budget, "verify_tendril: extension space too large");

  Graph target = gen_cir_star(n, r);
  std::string target_key = canonical_graph6(target);
  std::uint64_t examined = 0, qualifying = 0;
  std::vector<std::string> counterexamples;
  std::vector<int> degree(n + 1, 0);
  for (int v = 1; v <= base_n; ++v) degree[v] = base.degree(v);

  std::uint64_t total = 1ULL << candidate_edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (++examined > budget)
      fail(ErrorKind::Budget, "verify_tendril: budget exceeded after " +
                                  std::to_string(examined - 1) + " candidates");
    std::vector<int> deg(degree);
    bool ok = true;
    for (std::size_t e = 0; e < candidate_edges.size() && ok; ++e)
      if ((mask >> e) & 1ULL) {
        if (++deg[candidate_edges[e].first] > r) ok = false;
        if (++deg[candidate_edges[e].second] > r) ok = false;
      }
    if (!ok) continue;
    Graph g(n);
    for (int u = 1; u <= base_n; ++u)
      for (int v = u + 1; v <= base_n; ++v)
        if (base.has_edge(u, v)) g.add_edge(u, v);
    for (std::size_t e = 0; e < candidate_edges.size(); ++e)
      if ((mask >> e) & 1ULL)
        g.add_edge(candidate_edges[e].first, candidate_edges[e].second);
    if (!g.is_connected()) continue;
    SimplicialComplex c = clique_complex(g);
    if (!is_pure(c) || omega(c) != m) continue;
    if (!is_shellable(c)) continue;
    ++qualifying;
    if (canonical_graph6(g) != target_key)
      counterexamples.push_back(canonical_graph6(g));
  }
  std::sort(counterexamples.begin(), counterexamples.end());
  counterexamples.erase(
      std::unique(counterexamples.begin(), counterexamples.end()),
      counterexamples.end());
  return json{{"n", n},
              {"r", r},
              {"m", m},
              {"extensions_examined", examined},
              {"qualifying", qualifying},
              {"counterexamples", counterexamples}};
}

json verify_binom_lemma(int a_max) {
  if (a_max < 1) fail(ErrorKind::Domain, "verify_binom_lemma: a_max must be >= 1");
  std::uint64_t checked = 0;
  json violations = json::array();
  for (int a = 0; a <= a_max; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        for (int d = c; d <= c + (a - b) - 1; ++d) {
          ++checked;
          std::uint64_t lhs =
              binom(b, c) + static_cast<std::uint64_t>(a - b) * binom(b - 1, c - 1);
          std::uint64_t rhs = binom(a, d);
          if (lhs > rhs)
            violations.push_back(json{{"a", a}, {"b", b}, {"c", c}, {"d", d},
                                      {"lhs", lhs}, {"rhs", rhs}});
        }
  return json{{"a_max", a_max}, {"checked", checked}, {"violations", violations}};
}

json ratio_report(int r, int t, const std::vector<int>& n_values,
                  std::uint64_t budget, bool with_exhaustive) {
  if (r < 2 || r % 2 != 0) fail(ErrorKind::Domain, "ratio_report: r must be even");
  int m = r / 2 + 1;
  if (t < 0 || t > m) fail(ErrorKind::Domain, "ratio_report: need 0 <= t <= m");
  std::uint64_t limit = t > 0 ? binom(r / 2, t - 1) : (1ULL << (r / 2));
  json rows = json::array();
  for (int n : n_values) {
    if (n < m) fail(ErrorKind::Domain, "ratio_report: n below facet size");
    std::uint64_t count =
        t > 0 ? cir_star_clique_count(n, r, t) : cir_star_total_cliques(n, r);
    Rational ratio(static_cast<long long>(count), n);
    Rational gap(static_cast<long long>(limit) * n - static_cast<long long>(count), n);
    json row{{"n", n},
             {"count", count},
             {"ratio", ratio.str()},
             {"ratio_decimal", ratio.value()},
             {"limit", limit},
             {"gap", gap.str()},
             {"gap_decimal", gap.value()}};
    if (with_exhaustive && n <= 7) {
      SearchSpec spec;
      spec.n = n;
      spec.r = r;
      spec.t = t;
      spec.budget = budget;
      json report = extremal_f(spec);
      row["exhaustive_value"] = report["value"];
    }
    rows.push_back(row);
  }
  return json{{"r", r},
              {"t", t > 0 ? json(t) : json(nullptr)},
              {"limit", limit},
              {"rows", rows}};
}

namespace {

// t_min == 0: the bound constrains the total k(G) only; otherwise it
// constrains k_t(G) for every t >= t_min.
json check_bound_family(const std::vector<Graph>& graphs, const Graph& comparator,
                        int t_min) {
  CliqueCensus bound = enumerate_cliques(comparator);
  json violations = json::array();
  std::vector<std::string> tight;
  for (const Graph& g : graphs) {
    CliqueCensus c = enumerate_cliques(g);
    if (t_min == 0) {
      if (c.total > bound.total)
        violations.push_back(json{{"graph6", canonical_graph6(g)},
                                  {"count", c.total},
                                  {"bound", bound.total}});
      if (c.total == bound.total) tight.push_back(canonical_graph6(g));
      continue;
    }
    for (auto& kv : c.counts) {
      if (kv.first < t_min) continue;
      if (kv.second > bound.count(kv.first))
        violations.push_back(json{{"graph6", canonical_graph6(g)},
                                  {"t", kv.first},
                                  {"count", kv.second},
                                  {"bound", bound.count(kv.first)}});
    }
    bool is_tight = true;
    for (auto& kv : bound.counts)
      if (kv.first >= t_min && c.count(kv.first) != kv.second) is_tight = false;
    if (is_tight) tight.push_back(canonical_graph6(g));
  }
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  return json{{"graphs_checked", graphs.size()},
              {"violations", violations},
              {"tight_witnesses", tight}};
}

}  // namespace

json verify_classical_bounds(int n_max, std::uint64_t budget) {
  if (n_max < 1) fail(ErrorKind::Domain, "verify_classical_bounds: n_max must be >= 1");
  json zykov = json::array(), kk = json::array(), gls = json::array(),
       cr = json::array();
  for (int n = 1; n <= n_max; ++n) {
    // Kruskal-Katona corollary: bucket all graphs on n by edge count.
    EnumOptions unrestricted;
    unrestricted.budget = budget;
    std::vector<Graph> all = enumerate_graphs(n, unrestricted);
    int max_edges = n * (n - 1) / 2;
    for (int edges = 0; edges <= max_edges; ++edges) {
      std::vector<Graph> bucket;
      for (const Graph& g : all)
        if (g.edge_count() == edges) bucket.push_back(g);
      json res = check_bound_family(bucket, gen_colex(n, edges), 1);
      res["n"] = n;
      res["m"] = edges;
      kk.push_back(res);
    }
    for (int r = 1; r <= std::min(4, n); ++r) {
      // Zykov: omega(G) <= r against the Turan graph.
      EnumOptions omega_opts;
      omega_opts.max_omega = r;
      omega_opts.budget = budget;
      json res = check_bound_family(enumerate_graphs(n, omega_opts),
                                    gen_turan(n, r), 1);
      res["n"] = n;
      res["r"] = r;
      zykov.push_back(res);
    }
    for (int r = 1; r <= 4; ++r) {
      EnumOptions deg_opts;
      deg_opts.max_degree = r;
      deg_opts.budget = budget;
      std::vector<Graph> family = enumerate_graphs(n, deg_opts);
      // Cutler-Radcliffe: total cliques against aK_{r+1} u K_b.
      int a = n / (r + 1), b = n % (r + 1);
      json res = check_bound_family(family, gen_union_cliques(a, r, b), 0);
      res["n"] = n;
      res["r"] = r;
      cr.push_back(res);
      // Gan-Loh-Sudakov: single K_{r+1} regime, t >= 3.
      if (n >= r + 1 && n <= 2 * r + 1 && r >= 2) {
        json res2 = check_bound_family(family, gen_union_cliques(1, r, n - r - 1), 3);
        res2["n"] = n;
        res2["r"] = r;
        gls.push_back(res2);
      }
    }
  }
  auto total_violations = [](const json& arr) {
    std::size_t v = 0;
    for (auto& e : arr) v += e["violations"].size();
    return v;
  };
  return json{{"n_max", n_max},
              {"zykov", zykov},
              {"kruskal_katona", kk},
              {"gan_loh_sudakov", gls},
              {"cutler_radcliffe", cr},
              {"total_violations", total_violations(zykov) + total_violations(kk) +
                                       total_violations(gls) + total_violations(cr)}};
}

json odd_explore(int n, int r, std::uint64_t budget) {
  if (r < 3 || r % 2 == 0) fail(ErrorKind::Domain, "odd_explore: r must be odd and >= 3");
  if (n < 1) fail(ErrorKind::Domain, "odd_explore: n must be >= 1");
  int m = r / 2 + 1;
  json out{{"n", n}, {"r", r}, {"m", m}};
  if (n <= r) {
    out["out_of_regime"] = true;
    out["note"] = "n <= r: the complete graph dominates";
    out["complete_graph_total"] = (1ULL << n) - 1;
    return out;
  }
  out["out_of_regime"] = false;
  EnumOptions opts;
  opts.max_degree = r;
  opts.budget = budget;
  std::uint64_t scanned = 0;
  std::vector<Graph> graphs = enumerate_connected_graphs(n, opts, &scanned);
  struct Entry {
    std::uint64_t total;
    CliqueCensus census;
    std::string g6;
  };
  std::vector<Entry> qualifying;
  for (const Graph& g : graphs) {
    SimplicialComplex c = clique_complex(g);
    if (!is_pure(c) || omega(c) != m) continue;
    if (!is_shellable(c)) continue;
    CliqueCensus census = enumerate_cliques(g);
    qualifying.push_back({census.total, census, canonical_graph6(g)});
  }
  std::sort(qualifying.begin(), qualifying.end(), [](const Entry& a, const Entry& b) {
    return a.total != b.total ? a.total > b.total : a.g6 < b.g6;
  });
  json frontier = json::array();
  for (std::size_t i = 0; i < qualifying.size() && i < 5; ++i)
    frontier.push_back(json{{"graph6", qualifying[i].g6},
                            {"census", census_json(qualifying[i].census)}});
  std::map<int, std::uint64_t> per_t;
  for (const Entry& e : qualifying)
    for (auto& kv : e.census.counts)
      per_t[kv.first] = std::max(per_t[kv.first], kv.second);
  json per_t_json = json::object();
  for (auto& kv : per_t) per_t_json[std::to_string(kv.first)] = kv.second;

  CliqueCensus star = enumerate_cliques(gen_cir_star(n, r));
  out["cir_star"] = census_json(star);
  CliqueCensus star2 = enumerate_cliques(gen_cir_star_star(n, r));
  out["cir_star_star"] = census_json(star2);
  {
    SimplicialComplex c = clique_complex(gen_cir_star_star(n, r));
    bool q = is_pure(c) && omega(c) == m && is_shellable(c).has_value();
    out["cir_star_star_qualifies"] = q;
  }
  out["qualifying_count"] = qualifying.size();
  out["best_total"] = qualifying.empty() ? 0 : qualifying.front().total;
  out["per_t_max"] = per_t_json;
  out["frontier"] = frontier;
  out["graphs_scanned"] = scanned;
  return out;
}

json scan_large_clique_budget(int n, int r, std::uint64_t budget) {
  if (n < 1 || r < 1) fail(ErrorKind::Domain, "scan_large_clique_budget: n, r must be >= 1");
  int m = r / 2 + 1;
  json rows = json::array();
  for (int nn = 1; nn <= n; ++nn) {
    EnumOptions opts;
    opts.max_degree = r;
    opts.budget = budget;
    std::vector<Graph> graphs = enumerate_connected_graphs(nn, opts);
    int max_large_facets = 0;
    std::uint64_t max_km_above_omega = 0;
    std::string large_witness, km_witness;
    for (const Graph& g : graphs) {
      SimplicialComplex c = clique_complex(g);
      if (!is_shellable(c)) continue;
      int large = 0;
      for (const Face& f : c.facets())
        if (static_cast<int>(f.size()) > m) ++large;
      if (large > max_large_facets) {
        max_large_facets = large;
        large_witness = canonical_graph6(g);
      }
      if (omega(c) > m) {
        std::uint64_t km = enumerate_cliques(g).count(m);
        if (km > max_km_above_omega) {
          max_km_above_omega = km;
          km_witness = canonical_graph6(g);
        }
      }
    }
    rows.push_back(json{{"n", nn},
                        {"max_facets_larger_than_m", max_large_facets},
                        {"large_witness", large_witness},
                        {"max_k_m_with_omega_above_m", max_km_above_omega},
                        {"km_witness", km_witness}});
  }
  return json{{"n", n}, {"r", r}, {"m", m}, {"rows", rows}};
}

}  // namespace shellar
