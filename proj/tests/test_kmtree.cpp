#include "doctest.h"

#include <algorithm>
#include <set>

#include "shellar/enumerate.hpp"
#include "shellar/kmtree.hpp"

using namespace shellar;

namespace {

SimplicialComplex window_complex_z8() {
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

TEST_CASE("facet adjacency graph of the cyclic window complex is an 8-cycle") {
  FacetAdjacencyGraph fg = facet_graph(window_complex_z8(), 4);
  CHECK(fg.nodes.size() == 8);
  CHECK(fg.edges.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(fg.node_degree(i) == 2);
  CHECK(facet_graph_dot(fg).rfind("graph", 0) == 0);
  CHECK(facet_graph_json(fg).find("\"edges\"") != std::string::npos);
}

TEST_CASE("facet adjacency graph of a path power is a path") {
  SimplicialComplex c = clique_complex(gen_cir_star(9, 4));
  FacetAdjacencyGraph fg = facet_graph(c, 3);
  CHECK(fg.nodes.size() == 7);
  CHECK(fg.edges.size() == 6);
  int ends = 0;
  for (std::size_t i = 0; i < fg.nodes.size(); ++i)
    if (fg.node_degree(static_cast<int>(i)) == 1) ++ends;
  CHECK(ends == 2);
  CHECK_THROWS_AS(facet_graph(c, 4), Error);  // wrong facet size
  CHECK_THROWS_AS(facet_graph(SimplicialComplex(4, {{1, 2, 3}, {3, 4}}), 3),
                  Error);  // not pure
}

TEST_CASE("tree construction for the seven-vertex path power") {
  SimplicialComplex c = clique_complex(gen_cir_star(7, 4));
  auto cert = is_shellable(c);
  REQUIRE(cert.has_value());
  KmTree t = build_km_tree(c, 4, cert->order);
  CHECK(t.facet_count() == 5);
  CHECK(t.root.size() == 2);
  // root children carry no label; everything else is labeled
  int unlabeled = 0;
  for (int j = 0; j < t.facet_count(); ++j)
    if (t.parent_label[j] == 0) ++unlabeled;
  CHECK(unlabeled == 2);
  // recovered degrees equal the graph's degrees
  Graph g = gen_cir_star(7, 4);
  std::map<int, int> deg = tree_degrees(t, 4);
  for (int v = 1; v <= 7; ++v) CHECK(deg.at(v) == g.degree(v));
  CHECK(reconstruct_complex(t) == c);
  CHECK(km_tree_json(t).find("\"root\"") != std::string::npos);
  CHECK(km_tree_dot(t).rfind("digraph", 0) == 0);
}

TEST_CASE("tree degrees match the graph across the r=4 family") {
  for (int n = 6; n <= 12; ++n) {
    Graph g = gen_cir_star(n, 4);
    SimplicialComplex c = clique_complex(g);
    auto cert = is_shellable(c);
    REQUIRE(cert.has_value());
    KmTree t = build_km_tree(c, 4, cert->order);
    std::map<int, int> deg = tree_degrees(t, 4);
    for (int v = 1; v <= n; ++v) CHECK(deg.at(v) == g.degree(v));
    CHECK(reconstruct_complex(t) == c);
  }
}

TEST_CASE("branch condition at r/2 + 2 facets") {
  // Cir*(6,4) has exactly 4 = r/2 + 2 facets
  SimplicialComplex c = clique_complex(gen_cir_star(6, 4));
  auto cert = is_shellable(c);
  REQUIRE(cert.has_value());
  KmTree t = build_km_tree(c, 4, cert->order);
  REQUIRE(t.facet_count() == 4);
  CHECK(check_branch_lemma(t, 4));
  // wrong facet count violates the precondition
  SimplicialComplex big = clique_complex(gen_cir_star(8, 4));
  auto cert2 = is_shellable(big);
  KmTree t2 = build_km_tree(big, 4, cert2->order);
  CHECK_THROWS_AS(check_branch_lemma(t2, 4), Error);
}

TEST_CASE("tree construction rejects unsuitable complexes") {
  // odd r
  SimplicialComplex path = clique_complex(gen_cir_star(6, 2));
  auto cert = is_shellable(path);
  CHECK_THROWS_AS(build_km_tree(path, 3, cert->order), Error);
  // not pure
  SimplicialComplex np(4, {{1, 2, 3}, {3, 4}});
  CHECK_THROWS_AS(build_km_tree(np, 4, np.facets()), Error);
  // facet size does not equal r/2 + 1
  SimplicialComplex tri = clique_complex(gen_complete(3));
  CHECK_THROWS_AS(build_km_tree(tri, 6, tri.facets()), Error);
  // structural facets present (octahedron: 8 triangles on 6 vertices)
  SimplicialComplex oct = clique_complex(gen_circulant(6, {1, 2}));
  auto oc = is_shellable(oct);
  REQUIRE(oc.has_value());
  CHECK_THROWS_AS(build_km_tree(oct, 4, oc->order), Error);
}

TEST_CASE("facet graph degrees stay within the degree bound (r=4 sweep)") {
  EnumOptions opts;
  opts.max_degree = 4;
  for (int n = 3; n <= 9; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      if (!is_pure(c) || omega(c) != 3) continue;
      if (!is_shellable(c)) continue;
      FacetAdjacencyGraph fg = facet_graph(c, 3);
      for (std::size_t i = 0; i < fg.nodes.size(); ++i)
        CHECK(fg.node_degree(static_cast<int>(i)) <= 4);
    }
}
