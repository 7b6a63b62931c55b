#include "doctest.h"

#include "oracles.hpp"
#include "shellar/census.hpp"
#include "shellar/complex.hpp"
#include "shellar/enumerate.hpp"

using namespace shellar;

TEST_CASE("facet lists are normalized to antichains") {
  SimplicialComplex c(5, {{3, 2, 1}, {1, 2}, {4}});
  // {1,2} is dominated; vertex 5 is uncovered and becomes a singleton
  REQUIRE(c.facets().size() == 3);
  CHECK(c.facets()[0] == Face{1, 2, 3});
  CHECK(c.facets()[1] == Face{4});
  CHECK(c.facets()[2] == Face{5});
  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(SimplicialComplex(3, {{1, 1}}), Error);
}

TEST_CASE("clique complex facets are the maximal cliques") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      CHECK(c.facets() == oracle::maximal_cliques(g));
      CHECK(c.skeleton() == g);  // 1-skeleton recovers the graph
      CHECK(omega(c) == clique_number(g));
    }
}

TEST_CASE("f-vector equals the clique census") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, opts)) {
      FVector f = f_vector(clique_complex(g));
      CliqueCensus cc = enumerate_cliques(g);
      for (std::size_t i = 0; i < f.entries.size(); ++i)
        CHECK(f.entries[i] == cc.count(static_cast<int>(i) + 1));
      CHECK(!f.includes_empty_face);
      CHECK(f.total() == cc.total);
    }
  FVector f = f_vector(clique_complex(gen_complete(3)));
  CHECK(f.entries == std::vector<std::uint64_t>{3, 3, 1});
  CHECK(f.total() == 7);
}

TEST_CASE("f-vector counts each face once across facets") {
  SimplicialComplex c(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}});
  FVector f = f_vector(c);
  CHECK(f.entries == std::vector<std::uint64_t>{6, 10, 5});
  CHECK(f.total() == static_cast<std::uint64_t>(oracle::faces(c).size()));
}

TEST_CASE("purity and dimension queries") {
  CHECK(is_pure(clique_complex(gen_cir_star(8, 4))));
  CHECK(!is_pure(SimplicialComplex(4, {{1, 2, 3}, {3, 4}})));
  CHECK(omega(SimplicialComplex(4, {{1, 2, 3}, {3, 4}})) == 3);
  CHECK_THROWS_AS(omega(SimplicialComplex()), Error);
  CHECK_THROWS_AS(is_pure(SimplicialComplex()), Error);
}

TEST_CASE("facet text format round trips") {
  SimplicialComplex c(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}});
  CHECK(SimplicialComplex::from_text(c.to_text()) == c);
  CHECK_THROWS_AS(SimplicialComplex::from_text("2 2\n1 2\n"), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_text("junk"), Error);
}
