#include "shellar/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shellar {

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets) : n_(n) {
  if (n < 0) fail(ErrorKind::Domain, "complex: negative vertex count");
  std::vector<char> covered(n + 1, 0);
  for (Face& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      fail(ErrorKind::Domain, "complex: repeated vertex in facet");
    if (f.empty()) fail(ErrorKind::Domain, "complex: empty facet supplied");
    for (int v : f) {
      if (v < 1 || v > n)
        fail(ErrorKind::Domain, "complex: facet vertex out of range");
      covered[v] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!covered[v]) facets.push_back({v});
  // drop dominated faces so facets form an antichain
  std::sort(facets.begin(), facets.end(),
            [](const Face& a, const Face& b) { return a.size() > b.size(); });
  for (const Face& f : facets) {
    bool dominated = false;
    for (const Face& g : facets_)
      if (f != g && face_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated && std::find(facets_.begin(), facets_.end(), f) == facets_.end())
      facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
}

Graph SimplicialComplex::skeleton() const {
  Graph g(n_);
  for (const Face& f : facets_)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
  return g;
}

SimplicialComplex SimplicialComplex::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) fail(ErrorKind::Parse, "complex: empty input");
  std::istringstream hs(header);
  int n = -1, k = -1;
  if (!(hs >> n >> k) || n < 0 || k < 0)
    fail(ErrorKind::Parse, "complex: malformed \"n k\" header");
  std::vector<Face> facets;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Face f;
    int v;
    while (ls >> v) f.push_back(v);
    if (!f.empty()) facets.push_back(std::move(f));
  }
  if (static_cast<int>(facets.size()) != k)
    fail(ErrorKind::Parse, "complex: expected " + std::to_string(k) +
                               " facets, got " + std::to_string(facets.size()));
  return SimplicialComplex(n, std::move(facets));
}

std::string SimplicialComplex::to_text() const {
  std::ostringstream out;
  out << n_ << " " << facets_.size() << "\n";
  for (const Face& f : facets_) {
    for (std::size_t i = 0; i < f.size(); ++i)
      out << (i ? " " : "") << f[i];
    out << "\n";
  }
  return out.str();
}

SimplicialComplex clique_complex(const Graph& g) {
  return SimplicialComplex(g.vertex_count(), maximal_cliques(g));
}

FVector f_vector(const SimplicialComplex& c) {
  std::set<Face> faces;
  for (const Face& f : c.facets()) {
    std::size_t s = f.size();
    for (std::uint64_t mask = 1; mask < (1ULL << s); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < s; ++i)
        if ((mask >> i) & 1ULL) sub.push_back(f[i]);
      faces.insert(std::move(sub));
    }
  }
  FVector out;
  for (const Face& f : faces) {
    std::size_t dim = f.size() - 1;
    if (out.entries.size() <= dim) out.entries.resize(dim + 1, 0);
    ++out.entries[dim];
  }
  return out;
}

bool is_pure(const SimplicialComplex& c) {
  if (c.facets().empty()) fail(ErrorKind::Domain, "is_pure: complex has no facets");
  std::size_t s = c.facets().front().size();
  for (const Face& f : c.facets())
    if (f.size() != s) return false;
  return true;
}

int omega(const SimplicialComplex& c) {
  if (c.facets().empty()) fail(ErrorKind::Domain, "omega: complex has no facets");
  std::size_t best = 0;
  for (const Face& f : c.facets()) best = std::max(best, f.size());
  return static_cast<int>(best);
}

}  // namespace shellar
