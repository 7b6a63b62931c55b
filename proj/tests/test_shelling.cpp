#include "doctest.h"

#include "oracles.hpp"
#include "shellar/census.hpp"
#include "shellar/enumerate.hpp"
#include "shellar/shelling.hpp"

using namespace shellar;

namespace {

const SimplicialComplex& five_facet_example() {
  static SimplicialComplex c(
      6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}});
  return c;
}

SimplicialComplex window_complex_z8() {
  // Eight cyclic windows {i, i+1, i+2, i+3} on Z_8.
  std::vector<Face> facets;
  for (int i = 0; i < 8; ++i) {
    Face f;
    for (int d = 0; d < 4; ++d) f.push_back((i + d) % 8 + 1);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return SimplicialComplex(8, facets);
}

}  // namespace

TEST_CASE("five-facet example certificate") {
  std::vector<Face> order = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}};
  ShellingResult res = verify_shelling(five_facet_example(), order);
  REQUIRE(res.valid);
  CHECK(res.cert.restriction == std::vector<int>{0, 1, 1, 1, 2});
  CHECK(res.cert.classification ==
        std::vector<FacetKind>{FacetKind::VertexAdding, FacetKind::VertexAdding,
                               FacetKind::VertexAdding, FacetKind::VertexAdding,
                               FacetKind::Structural});
  CHECK(res.cert.vertex_delta == std::vector<int>{3, 1, 1, 1, 0});
  CHECK(res.cert.edge_delta == std::vector<int>{3, 2, 2, 2, 1});
  CHECK(free_degree_trace(res.cert, 4) ==
        std::vector<long long>{6, 6, 6, 6, 4});
  // formula counts from the certificate agree with direct face counts
  CHECK(face_count_by_size(res.cert, 1) == 6);
  CHECK(face_count_by_size(res.cert, 2) == 10);
  CHECK(face_count_by_size(res.cert, 3) == 5);
  CHECK(total_faces(res.cert) == 22);  // includes the empty face
}

TEST_CASE("bad orders are rejected with the failing step") {
  // starting from the structural facet breaks purity at step 2
  std::vector<Face> order = {{4, 5, 6}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}};
  ShellingResult res = verify_shelling(five_facet_example(), order);
  CHECK(!res.valid);
  CHECK(res.failing_step == 2);
  CHECK(!oracle::order_is_shelling(order));
  // non-permutations are a domain error
  CHECK_THROWS_AS(
      verify_shelling(five_facet_example(), std::vector<Face>{{1, 2, 3}}),
      Error);
}

TEST_CASE("decision procedure finds a shelling for the example") {
  auto cert = is_shellable(five_facet_example());
  REQUIRE(cert.has_value());
  CHECK(verify_shelling(five_facet_example(), cert->order).valid);
  CHECK(oracle::order_is_shelling(cert->order));
  CHECK(cert->structural_count() == 1);
}

TEST_CASE("window complex on Z_8 is not shellable") {
  SimplicialComplex c = window_complex_z8();
  CHECK(is_pure(c));
  CHECK(!is_shellable(c).has_value());
  CHECK(!is_shellable_any_order(c));
}

TEST_CASE("disconnected complexes with two nontrivial components fail") {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(4, 5);
  CHECK(!is_shellable(clique_complex(g)).has_value());
  // an isolated vertex alone does not obstruct: its facet is a singleton
  Graph h(4);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(1, 3);
  CHECK(is_shellable(clique_complex(h)).has_value());
}

TEST_CASE("decreasing-size restriction loses nothing (small sweep)") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      bool fast = is_shellable(c).has_value();
      CHECK(fast == is_shellable_any_order(c));
      if (c.facets().size() <= 6) CHECK(fast == oracle::shellable_by_brute_force(c));
    }
}

TEST_CASE("certificate arithmetic identities hold across a sweep") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      auto cert = is_shellable(c);
      if (!cert) continue;
      FVector f = f_vector(c);
      for (int t = 1; t <= n; ++t)
        CHECK(face_count_by_size(*cert, t) ==
              (t <= static_cast<int>(f.entries.size()) ? f.entries[t - 1] : 0));
      CHECK(total_faces(*cert) == f.total() + 1);
      // a structural facet can add at most one new edge (never two); zero
      // happens, e.g. the closing facets of the octahedron
      for (std::size_t i = 0; i < cert->order.size(); ++i)
        if (cert->classification[i] == FacetKind::Structural) {
          CHECK(cert->edge_delta[i] <= 1);
          CHECK(cert->edge_delta[i] >= 0);
        }
      // free degree stays nonnegative under r = max degree
      int r = g.max_degree();
      for (long long fd : free_degree_trace(*cert, r)) CHECK(fd >= 0);
    }
}

TEST_CASE("edge-adding structural facets respect the degree-budget cap") {
  // provable form: structural facets that introduce an edge number at most
  // (s(r-s+1) + (n-s)(r-2s+2)) / 2 with r the max degree, since each eats
  // two units of free degree and the trace stays nonnegative
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      if (!is_pure(c)) continue;
      auto cert = is_shellable(c);
      if (!cert) continue;
      int r = g.max_degree();
      int s = static_cast<int>(cert->order.front().size());
      long long edge_adding = 0;
      for (std::size_t i = 0; i < cert->order.size(); ++i)
        if (cert->classification[i] == FacetKind::Structural)
          edge_adding += cert->edge_delta[i];
      long long cap = static_cast<long long>(s) * (r - s + 1) +
                      static_cast<long long>(n - s) * (r - 2 * s + 2);
      CHECK(2LL * edge_adding <= cap);
    }
}

TEST_CASE("structural bound evaluates as exact rationals") {
  CHECK(structural_facet_bound(7, 4, 3) == Rational(3, 1));
  CHECK(structural_facet_bound(8, 4, 3) == Rational(3, 1));
  CHECK(structural_facet_bound(6, 3, 2) == Rational(3, 1));
  CHECK(structural_facet_bound(7, 3, 2) == Rational(7, 2));
  CHECK_THROWS_AS(structural_facet_bound(7, 4, 4), Error);  // s too large
}

TEST_CASE("free-degree trace needs r at least the max degree") {
  auto cert = is_shellable(clique_complex(gen_cir_star(6, 4)));
  REQUIRE(cert.has_value());
  CHECK_THROWS_AS(free_degree_trace(*cert, 3), Error);
  std::vector<long long> trace = free_degree_trace(*cert, 4);
  CHECK(trace.size() == cert->order.size());
  CHECK(trace.back() == 6 * 4 - 2 * gen_cir_star(6, 4).edge_count());
}

TEST_CASE("certificate json is stable and complete") {
  auto cert = is_shellable(five_facet_example());
  REQUIRE(cert.has_value());
  ShellingResult res;
  res.valid = true;
  res.cert = *cert;
  std::string a = certificate_json(res, 4);
  CHECK(a == certificate_json(res, 4));
  CHECK(a.find("\"restriction\"") != std::string::npos);
  CHECK(a.find("\"free_degree\"") != std::string::npos);
}
