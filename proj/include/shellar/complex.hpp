#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shellar/census.hpp"
#include "shellar/graph.hpp"

namespace shellar {

// Facet-represented simplicial complex on vertices 1..n. Facets form an
// antichain, each sorted, the list sorted lexicographically. Vertices not
// covered by a supplied facet become singleton facets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int n, std::vector<Face> facets);

  int vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  // The 1-skeleton as a graph (recovers g exactly for clique complexes).
  Graph skeleton() const;

  // Facet-list text format: "n k" then k space-separated facet lines.
  static SimplicialComplex from_text(const std::string& text);
  std::string to_text() const;

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

struct FVector {
  std::vector<std::uint64_t> entries;  // f_0 .. f_{d-1}
  bool includes_empty_face = false;

  std::uint64_t total() const {
    std::uint64_t s = includes_empty_face ? 1 : 0;
    for (auto e : entries) s += e;
    return s;
  }
};

SimplicialComplex clique_complex(const Graph& g);
FVector f_vector(const SimplicialComplex& c);
bool is_pure(const SimplicialComplex& c);
int omega(const SimplicialComplex& c);

}  // namespace shellar
