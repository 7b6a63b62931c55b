#include "shellar/shelling.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "json.hpp"

namespace shellar {

namespace {

// Inclusion-maximal intersections of `f` with the facets indexed by `mask`.
std::vector<Face> maximal_intersections(const Face& f,
                                        const std::vector<Face>& facets,
                                        std::uint64_t mask) {
  std::vector<Face> inters;
  for (std::size_t j = 0; j < facets.size(); ++j) {
    if (!((mask >> j) & 1ULL)) continue;
    Face i = face_intersect(f, facets[j]);
    inters.push_back(std::move(i));
  }
  std::vector<Face> maximal;
  for (std::size_t a = 0; a < inters.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < inters.size() && !dominated; ++b)
      if (a != b && (face_subset(inters[a], inters[b]) &&
                     (inters[a] != inters[b] || b < a)))
        dominated = true;
    if (!dominated) maximal.push_back(inters[a]);
  }
  return maximal;
}

// Shelling condition: every maximal face of <F> cap <prior> has cardinality
// |F| - 1. (For |F| = 1 the empty intersection qualifies.)
bool attaches_purely(const Face& f, const std::vector<Face>& facets,
                     std::uint64_t prior_mask, std::vector<Face>* gens) {
  std::vector<Face> maximal = maximal_intersections(f, facets, prior_mask);
  if (gens) *gens = maximal;
  if (maximal.empty()) return false;  // no prior facets at all
  for (const Face& m : maximal)
    if (m.size() != f.size() - 1) return false;
  return true;
}

struct ShellSearch {
  const std::vector<Face>& facets;
  std::unordered_map<std::uint64_t, char> memo;

  bool shellable(std::uint64_t mask) {
    if (std::popcount(mask) <= 1) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t min_size = SIZE_MAX;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if ((mask >> i) & 1ULL) min_size = std::min(min_size, facets[i].size());
    bool ok = false;
    for (std::size_t i = 0; i < facets.size() && !ok; ++i) {
      if (!((mask >> i) & 1ULL) || facets[i].size() != min_size) continue;
      std::uint64_t rest = mask & ~(1ULL << i);
      if (attaches_purely(facets[i], facets, rest, nullptr) && shellable(rest))
        ok = true;
    }
    memo[mask] = ok;
    return ok;
  }

  // Builds the canonical decreasing order back-to-front; call only when
  // shellable(mask) holds.
  void build(std::uint64_t mask, std::vector<Face>& out) {
    if (std::popcount(mask) == 1) {
      out.push_back(facets[std::countr_zero(mask)]);
      return;
    }
    std::size_t min_size = SIZE_MAX;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if ((mask >> i) & 1ULL) min_size = std::min(min_size, facets[i].size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (!((mask >> i) & 1ULL) || facets[i].size() != min_size) continue;
      std::uint64_t rest = mask & ~(1ULL << i);
      if (attaches_purely(facets[i], facets, rest, nullptr) && shellable(rest)) {
        build(rest, out);
        out.push_back(facets[i]);
        return;
      }
    }
    fail(ErrorKind::Internal, "shelling: build called on unshellable subset");
  }
};

}  // namespace

ShellingResult verify_shelling(const SimplicialComplex& c,
                               const std::vector<Face>& order) {
  std::vector<Face> sorted_order(order);
  for (Face& f : sorted_order) std::sort(f.begin(), f.end());
  {
    std::vector<Face> a(sorted_order), b(c.facets());
    std::sort(a.begin(), a.end());
    if (a != b)
      fail(ErrorKind::Domain, "verify_shelling: order is not a permutation of the facets");
  }
  if (sorted_order.size() > 64)
    fail(ErrorKind::Domain, "verify_shelling: more than 64 facets unsupported");

  ShellingResult res;
  std::size_t l = sorted_order.size();
  Graph g(c.vertex_count());
  std::vector<char> seen(c.vertex_count() + 1, 0);
  int vcount = 0, ecount = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const Face& f = sorted_order[i];
    if (i > 0) {
      std::vector<Face> gens;
      std::uint64_t prior = (1ULL << i) - 1;
      if (!attaches_purely(f, sorted_order, prior, &gens)) {
        res.valid = false;
        res.failing_step = static_cast<int>(i) + 1;
        res.offending = gens;
        return res;
      }
    }
    // restriction number: distinct v with F_i - F_j = {v} for some j < i
    Face r_verts;
    for (std::size_t j = 0; j < i; ++j) {
      Face d = face_diff(f, sorted_order[j]);
      if (d.size() == 1) r_verts.push_back(d[0]);
    }
    std::sort(r_verts.begin(), r_verts.end());
    r_verts.erase(std::unique(r_verts.begin(), r_verts.end()), r_verts.end());
    res.cert.restriction.push_back(static_cast<int>(r_verts.size()));

    int vd = 0, ed = 0;
    for (int v : f)
      if (!seen[v]) {
        seen[v] = 1;
        ++vd;
        ++vcount;
      }
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        if (!g.has_edge(f[a], f[b])) {
          g.add_edge(f[a], f[b]);
          ++ed;
          ++ecount;
        }
    res.cert.vertex_delta.push_back(vd);
    res.cert.edge_delta.push_back(ed);
    res.cert.cum_vertices.push_back(vcount);
    res.cert.cum_edges.push_back(ecount);
    res.cert.classification.push_back(
        (i == 0 || vd == 1) ? FacetKind::VertexAdding : FacetKind::Structural);
  }
  res.cert.order = sorted_order;
  res.cert.underlying_max_degree = g.max_degree();
  res.valid = true;
  return res;
}

std::optional<ShellingCertificate> is_shellable(const SimplicialComplex& c) {
  if (c.facets().empty())
    fail(ErrorKind::Domain, "is_shellable: complex has no facets");
  if (c.facets().size() > 64)
    fail(ErrorKind::Domain, "is_shellable: more than 64 facets unsupported");
  ShellSearch search{c.facets(), {}};
  std::uint64_t full = c.facets().size() == 64
                           ? ~0ULL
                           : ((1ULL << c.facets().size()) - 1);
  if (!search.shellable(full)) return std::nullopt;
  std::vector<Face> order;
  search.build(full, order);
  ShellingResult res = verify_shelling(c, order);
  if (!res.valid) fail(ErrorKind::Internal, "is_shellable: constructed order invalid");
  return res.cert;
}

bool is_shellable_any_order(const SimplicialComplex& c) {
  if (c.facets().empty())
    fail(ErrorKind::Domain, "is_shellable_any_order: complex has no facets");
  if (c.facets().size() > 30)
    fail(ErrorKind::Domain, "is_shellable_any_order: facet count too large");
  const std::vector<Face>& facets = c.facets();
  std::uint64_t full = (1ULL << facets.size()) - 1;
  // Whether the facets in `mask` can be arranged as a valid shelling prefix:
  // appending F to a prefix only depends on the SET already placed.
  std::unordered_map<std::uint64_t, char> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> bool {
    if (mask == full) return true;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (std::size_t i = 0; i < facets.size() && !ok; ++i) {
      if ((mask >> i) & 1ULL) continue;
      if (mask == 0 || attaches_purely(facets[i], facets, mask, nullptr))
        if (self(self, mask | (1ULL << i))) ok = true;
    }
    memo[mask] = ok;
    return ok;
  };
  return rec(rec, 0);
}

std::uint64_t face_count_by_size(const ShellingCertificate& cert, int t) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    long long fi = static_cast<long long>(cert.order[i].size());
    long long ri = cert.restriction[i];
    sum += binom(fi - ri, t - ri);
  }
  return sum;
}

std::uint64_t total_faces(const ShellingCertificate& cert) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < cert.order.size(); ++i)
    sum += 1ULL << (cert.order[i].size() - cert.restriction[i]);
  return sum;
}

std::vector<long long> free_degree_trace(const ShellingCertificate& cert, int r) {
  if (r < cert.underlying_max_degree)
    fail(ErrorKind::Domain, "free_degree_trace: r below max degree of underlying graph");
  std::vector<long long> trace;
  long long incremental = 0;
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    long long direct = static_cast<long long>(cert.cum_vertices[i]) * r -
                       2LL * cert.cum_edges[i];
    // a vertex-adding facet of size m introduces exactly m - 1 edges, so it
    // contributes r + 2 - 2m; a structural facet consumes 2 per edge it
    // introduces, which can be 0 or 1
    long long m = static_cast<long long>(cert.order[i].size());
    if (i == 0)
      incremental = m * r - m * (m - 1);
    else if (cert.classification[i] == FacetKind::VertexAdding)
      incremental += r + 2 - 2 * m;
    else
      incremental -= 2LL * cert.edge_delta[i];
    if (incremental != direct)
      fail(ErrorKind::Internal,
           "free_degree_trace: incremental and direct accounting disagree at step " +
               std::to_string(i + 1));
    trace.push_back(direct);
  }
  return trace;
}

Rational structural_facet_bound(int n, int r, int s) {
  if (s < 1 || n < s) fail(ErrorKind::Domain, "structural_facet_bound: need 1 <= s <= n");
  if (s > r / 2 + 1)
    fail(ErrorKind::Domain, "structural_facet_bound: s > floor(r/2)+1 is outside the regime");
  long long num = static_cast<long long>(s) * (s - 1) +
                  static_cast<long long>(n - s) * (r - 2 * s + 2);
  return Rational(num, 2);
}

std::string certificate_json(const ShellingResult& res, int free_degree_r) {
  nlohmann::json j;
  j["valid"] = res.valid;
  if (!res.valid) {
    j["failing_step"] = res.failing_step;
    j["offending"] = res.offending;
    return j.dump();
  }
  j["failing_step"] = nullptr;
  j["order"] = res.cert.order;
  j["restriction"] = res.cert.restriction;
  std::vector<std::string> cls;
  for (FacetKind k : res.cert.classification)
    cls.push_back(k == FacetKind::VertexAdding ? "vertex-adding" : "structural");
  j["classification"] = cls;
  j["vertex_delta"] = res.cert.vertex_delta;
  j["edge_delta"] = res.cert.edge_delta;
  if (free_degree_r > 0)
    j["free_degree"] = free_degree_trace(res.cert, free_degree_r);
  else
    j["free_degree"] = nullptr;
  return j.dump();
}

}  // namespace shellar
