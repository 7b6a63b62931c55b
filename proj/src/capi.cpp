#include "shellar/capi.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "json.hpp"
#include "shellar/census.hpp"
#include "shellar/complex.hpp"
#include "shellar/graph.hpp"
#include "shellar/graph6.hpp"
#include "shellar/iso.hpp"
#include "shellar/kmtree.hpp"
#include "shellar/search.hpp"
#include "shellar/shelling.hpp"

using namespace shellar;
using nlohmann::json;

struct shellar_graph {
  Graph g;
};
struct shellar_complex {
  SimplicialComplex c;
};

namespace {

thread_local std::string g_last_error;

int status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Domain:
      return SHELLAR_EDOMAIN;
    case ErrorKind::Usage:
      return SHELLAR_EUSAGE;
    case ErrorKind::Parse:
      return SHELLAR_EPARSE;
    case ErrorKind::Budget:
      return SHELLAR_EBUDGET;
    case ErrorKind::Internal:
      return SHELLAR_EINTERNAL;
  }
  return SHELLAR_EINTERNAL;
}

template <typename F>
int guarded(F&& fn) {
  try {
    fn();
    return SHELLAR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SHELLAR_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int require(bool ok, const char* msg) {
  if (ok) return SHELLAR_OK;
  g_last_error = msg;
  return SHELLAR_EUSAGE;
}

}  // namespace

extern "C" {

const char* shellar_version(void) { return "1.0.0"; }

const char* shellar_last_error(void) { return g_last_error.c_str(); }

void shellar_free_string(char* s) { std::free(s); }
void shellar_graph_free(shellar_graph* g) { delete g; }
void shellar_complex_free(shellar_complex* c) { delete c; }

int shellar_graph_from_graph6(const char* line, shellar_graph** out) {
  if (int s = require(line && out, "null argument")) return s;
  return guarded([&] { *out = new shellar_graph{parse_graph6(line)}; });
}

int shellar_graph_from_edge_list(const char* text, shellar_graph** out) {
  if (int s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new shellar_graph{Graph::from_edge_list(text)}; });
}

int shellar_graph_generate(const char* family, const long long* args,
                           int nargs, shellar_graph** out) {
  if (int s = require(family && out && (args || nargs == 0), "null argument"))
    return s;
  return guarded([&] {
    std::string f = family;
    auto arg = [&](int i) -> long long {
      if (i >= nargs)
        fail(ErrorKind::Usage, "generate: family '" + f + "' needs more arguments");
      return args[i];
    };
    Graph g;
    if (f == "complete")
      g = gen_complete(static_cast<int>(arg(0)));
    else if (f == "turan")
      g = gen_turan(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    else if (f == "colex")
      g = gen_colex(static_cast<int>(arg(0)), arg(1));
    else if (f == "union")
      g = gen_union_cliques(static_cast<int>(arg(0)), static_cast<int>(arg(1)),
                            static_cast<int>(arg(2)));
    else if (f == "cirstar")
      g = gen_cir_star(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    else if (f == "cirstarstar")
      g = gen_cir_star_star(static_cast<int>(arg(0)), static_cast<int>(arg(1)));
    else
      fail(ErrorKind::Usage, "generate: unknown family '" + f + "'");
    *out = new shellar_graph{std::move(g)};
  });
}

int shellar_graph_circulant(int n, const int* connections, int len,
                            shellar_graph** out) {
  if (int s = require(out && (connections || len == 0), "null argument"))
    return s;
  return guarded([&] {
    std::vector<int> j(connections, connections + len);
    *out = new shellar_graph{gen_circulant(n, j)};
  });
}

int shellar_graph_vertex_count(const shellar_graph* g) {
  return g ? g->g.vertex_count() : -1;
}
int shellar_graph_edge_count(const shellar_graph* g) {
  return g ? g->g.edge_count() : -1;
}
int shellar_graph_max_degree(const shellar_graph* g) {
  return g ? g->g.max_degree() : -1;
}
int shellar_graph_has_edge(const shellar_graph* g, int u, int v) {
  if (!g) return -1;
  int n = g->g.vertex_count();
  if (u < 1 || v < 1 || u > n || v > n) return -1;
  return g->g.has_edge(u, v) ? 1 : 0;
}
int shellar_graph_is_connected(const shellar_graph* g) {
  return g ? (g->g.is_connected() ? 1 : 0) : -1;
}

int shellar_graph_to_graph6(const shellar_graph* g, char** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(emit_graph6(g->g)); });
}

int shellar_graph_to_edge_list(const shellar_graph* g, char** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(g->g.to_edge_list()); });
}

int shellar_graph_canonical_graph6(const shellar_graph* g, char** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(canonical_graph6(g->g)); });
}

int shellar_graph_is_isomorphic(const shellar_graph* a, const shellar_graph* b,
                                int* out) {
  if (int s = require(a && b && out, "null argument")) return s;
  return guarded([&] { *out = is_isomorphic(a->g, b->g) ? 1 : 0; });
}

int shellar_graph_census_json(const shellar_graph* g, char** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] {
    CliqueCensus c = enumerate_cliques(g->g);
    json counts = json::object();
    int w = 0;
    for (auto& kv : c.counts) {
      counts[std::to_string(kv.first)] = kv.second;
      w = std::max(w, kv.first);
    }
    json j{{"counts", counts}, {"total", c.total}, {"omega", w}};
    *out = dup_string(j.dump());
  });
}

int shellar_graph_maximal_cliques_json(const shellar_graph* g, char** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] {
    json j = json::array();
    for (const Face& f : maximal_cliques(g->g)) j.push_back(f);
    *out = dup_string(j.dump());
  });
}

int shellar_folklore_bound(int n, int r, int t, uint64_t* out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = folklore_bound(n, r, t); });
}

int shellar_complex_from_graph(const shellar_graph* g, shellar_complex** out) {
  if (int s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = new shellar_complex{clique_complex(g->g)}; });
}

int shellar_complex_from_text(const char* text, shellar_complex** out) {
  if (int s = require(text && out, "null argument")) return s;
  return guarded(
      [&] { *out = new shellar_complex{SimplicialComplex::from_text(text)}; });
}

int shellar_complex_to_text(const shellar_complex* c, char** out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] { *out = dup_string(c->c.to_text()); });
}

int shellar_complex_vertex_count(const shellar_complex* c) {
  return c ? c->c.vertex_count() : -1;
}
int shellar_complex_facet_count(const shellar_complex* c) {
  return c ? static_cast<int>(c->c.facets().size()) : -1;
}

int shellar_complex_is_pure(const shellar_complex* c, int* out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] { *out = is_pure(c->c) ? 1 : 0; });
}

int shellar_complex_omega(const shellar_complex* c, int* out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] { *out = omega(c->c); });
}

int shellar_complex_fvector_json(const shellar_complex* c, char** out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] {
    FVector f = f_vector(c->c);
    json j{{"entries", f.entries},
           {"includes_empty_face", f.includes_empty_face},
           {"total", f.total()}};
    *out = dup_string(j.dump());
  });
}

int shellar_complex_shellable_json(const shellar_complex* c, int free_degree_r,
                                   char** out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] {
    auto cert = is_shellable(c->c);
    if (!cert) {
      *out = dup_string(json{{"valid", false}}.dump());
      return;
    }
    ShellingResult res;
    res.valid = true;
    res.cert = *cert;
    *out = dup_string(certificate_json(res, free_degree_r));
  });
}

int shellar_complex_verify_order_json(const shellar_complex* c,
                                      const char* order_text, int free_degree_r,
                                      char** out) {
  if (int s = require(c && order_text && out, "null argument")) return s;
  return guarded([&] {
    std::vector<Face> order;
    std::istringstream in(order_text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      Face f;
      int v;
      while (ls >> v) f.push_back(v);
      if (!ls.eof())
        fail(ErrorKind::Parse, "verify_order: bad facet line '" + line + "'");
      if (!f.empty()) order.push_back(std::move(f));
    }
    ShellingResult res = verify_shelling(c->c, order);
    *out = dup_string(certificate_json(res, free_degree_r));
  });
}

int shellar_complex_facet_graph(const shellar_complex* c, int m, int format,
                                char** out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] {
    FacetAdjacencyGraph fg = facet_graph(c->c, m);
    if (format == SHELLAR_FORMAT_DOT)
      *out = dup_string(facet_graph_dot(fg));
    else
      *out = dup_string(facet_graph_json(fg));
  });
}

int shellar_complex_km_tree(const shellar_complex* c, int r, int format,
                            char** out) {
  if (int s = require(c && out, "null argument")) return s;
  return guarded([&] {
    auto cert = is_shellable(c->c);
    if (!cert) fail(ErrorKind::Domain, "km_tree: complex is not shellable");
    KmTree t = build_km_tree(c->c, r, cert->order);
    if (format == SHELLAR_FORMAT_DOT) {
      *out = dup_string(km_tree_dot(t));
      return;
    }
    json degrees = json::object();
    for (auto& kv : tree_degrees(t, r))
      degrees[std::to_string(kv.first)] = kv.second;
    json j = json::parse(km_tree_json(t));
    j["degrees"] = degrees;
    j["reconstruction_ok"] = reconstruct_complex(t) == c->c;
    if (t.facet_count() == r / 2 + 2) j["branch_ok"] = check_branch_lemma(t, r);
    *out = dup_string(j.dump());
  });
}

int shellar_structural_bound(int n, int r, int s, char** out) {
  if (int st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = dup_string(structural_facet_bound(n, r, s).str()); });
}

int shellar_cir_star_count(int n, int r, int t, uint64_t* out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = cir_star_clique_count(n, r, t); });
}

int shellar_cir_star_total(int n, int r, uint64_t* out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = cir_star_total_cliques(n, r); });
}

int shellar_extremal_search(const char* spec_json, char** out) {
  if (int s = require(spec_json && out, "null argument")) return s;
  return guarded([&] {
    json j;
    try {
      j = json::parse(spec_json);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::Parse, std::string("search spec: ") + e.what());
    }
    SearchSpec spec;
    spec.n = j.value("n", 0);
    spec.r = j.value("r", 0);
    spec.t = j.value("t", 0);
    spec.require_pure = j.value("pure", false);
    spec.require_connected = j.value("connected", true);
    spec.budget = j.value("budget", spec.budget);
    spec.workers = j.value("workers", 1);
    if (j.contains("graphs")) {
      spec.use_external = true;
      for (const auto& line : j["graphs"])
        spec.external.push_back(parse_graph6(line.get<std::string>()));
    }
    *out = dup_string(extremal_f(spec).dump());
  });
}

int shellar_verify_unique_km_tree(int r, uint64_t budget, int n_override,
                                  int facets_override, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(
        verify_unique_km_tree(r, budget, n_override, facets_override).dump());
  });
}

int shellar_verify_tendril(int n, int r, uint64_t budget, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = dup_string(verify_tendril(n, r, budget).dump()); });
}

int shellar_verify_binom(int a_max, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = dup_string(verify_binom_lemma(a_max).dump()); });
}

int shellar_verify_classical(int n_max, uint64_t budget, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded(
      [&] { *out = dup_string(verify_classical_bounds(n_max, budget).dump()); });
}

int shellar_ratio_report(int r, int t, const int* n_values, int len,
                         uint64_t budget, int with_exhaustive, char** out) {
  if (int s = require(out && (n_values || len == 0), "null argument")) return s;
  return guarded([&] {
    std::vector<int> ns(n_values, n_values + len);
    *out = dup_string(ratio_report(r, t, ns, budget, with_exhaustive != 0).dump());
  });
}

int shellar_odd_explore(int n, int r, uint64_t budget, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded([&] { *out = dup_string(odd_explore(n, r, budget).dump()); });
}

int shellar_scan_large_clique(int n, int r, uint64_t budget, char** out) {
  if (int s = require(out != nullptr, "null argument")) return s;
  return guarded(
      [&] { *out = dup_string(scan_large_clique_budget(n, r, budget).dump()); });
}

}  // extern "C"
