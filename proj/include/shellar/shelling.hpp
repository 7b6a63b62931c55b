#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shellar/complex.hpp"

namespace shellar {

enum class FacetKind { VertexAdding, Structural };

// A validated shelling order with per-step data. F_1 is tagged vertex-adding
// with vertex_delta |F_1|; the dichotomy proper applies from step 2 on.
struct ShellingCertificate {
  std::vector<Face> order;
  std::vector<int> restriction;        // r_i
  std::vector<FacetKind> classification;
  std::vector<int> vertex_delta;       // |V(G_i)| - |V(G_{i-1})|
  std::vector<int> edge_delta;         // |E(G_i)| - |E(G_{i-1})|
  std::vector<int> cum_vertices;       // |V(G_i)|
  std::vector<int> cum_edges;          // |E(G_i)|
  int underlying_max_degree = 0;       // Delta of G_l

  int structural_count() const {
    int w = 0;
    for (FacetKind k : classification)
      if (k == FacetKind::Structural) ++w;
    return w;
  }
};

struct ShellingResult {
  bool valid = false;
  ShellingCertificate cert;            // populated when valid
  int failing_step = -1;               // 1-based step index when invalid
  std::vector<Face> offending;         // maximal intersection generators there
};

// Validates `order` (a permutation of c's facets) against the pure-intersection
// condition; computes restriction numbers, classification and deltas.
ShellingResult verify_shelling(const SimplicialComplex& c,
                               const std::vector<Face>& order);

// Decision procedure over size-decreasing orders (complete by the
// Rearrangement Lemma), memoized over facet subsets. Deterministic: among
// feasible last facets of minimum size the lexicographically smallest wins.
std::optional<ShellingCertificate> is_shellable(const SimplicialComplex& c);

// Existence check over ALL facet permutations, not just decreasing ones.
bool is_shellable_any_order(const SimplicialComplex& c);

// Sum of C(|F_i| - r_i, t - r_i): the number of faces of cardinality t.
std::uint64_t face_count_by_size(const ShellingCertificate& cert, int t);

// Sum of 2^(|F_i| - r_i): all faces including the empty face.
std::uint64_t total_faces(const ShellingCertificate& cert);

// Entry after step i is |V(G_i)|*r - sum of degrees in G_i; cross-checked
// against the incremental accounting (r+2-2m per vertex-adding facet of
// size m, -2 per structural facet).
std::vector<long long> free_degree_trace(const ShellingCertificate& cert, int r);

// (1/2)s(s-1) + (1/2)(n-s)(r-2s+2): cap on structural facets of a pure
// shellable clique complex with facet size s under max degree r.
Rational structural_facet_bound(int n, int r, int s);

std::string certificate_json(const ShellingResult& res, int free_degree_r = 0);

}  // namespace shellar
