#include "shellar/kmtree.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace shellar {

FacetAdjacencyGraph facet_graph(const SimplicialComplex& c, int m) {
  if (!is_pure(c)) fail(ErrorKind::Domain, "facet_graph: complex is not pure");
  if (omega(c) != m)
    fail(ErrorKind::Domain, "facet_graph: m does not match the facet size");
  FacetAdjacencyGraph fg;
  fg.m = m;
  fg.nodes = c.facets();
  for (std::size_t i = 0; i < fg.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < fg.nodes.size(); ++j)
      if (face_intersect(fg.nodes[i], fg.nodes[j]).size() ==
          static_cast<std::size_t>(m - 1))
        fg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return fg;
}

std::string facet_graph_dot(const FacetAdjacencyGraph& fg) {
  std::ostringstream out;
  out << "graph facets {\n";
  for (std::size_t i = 0; i < fg.nodes.size(); ++i) {
    out << "  f" << i << " [label=\"{";
    for (std::size_t k = 0; k < fg.nodes[i].size(); ++k)
      out << (k ? "," : "") << fg.nodes[i][k];
    out << "}\"];\n";
  }
  for (auto& e : fg.edges) out << "  f" << e.first << " -- f" << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string facet_graph_json(const FacetAdjacencyGraph& fg) {
  nlohmann::json j;
  j["m"] = fg.m;
  j["nodes"] = fg.nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (auto& e : fg.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  return j.dump();
}

KmTree build_km_tree(const SimplicialComplex& c, int r,
                     const std::vector<Face>& order) {
  if (r < 2 || r % 2 != 0) fail(ErrorKind::Domain, "build_km_tree: r must be even and >= 2");
  int m = r / 2 + 1;
  if (!is_pure(c) || omega(c) != m)
    fail(ErrorKind::Domain, "build_km_tree: complex must be pure with facet size r/2+1");
  if (order.size() < 2) fail(ErrorKind::Domain, "build_km_tree: need at least two facets");
  ShellingResult res = verify_shelling(c, order);
  if (!res.valid)
    fail(ErrorKind::Domain, "build_km_tree: order is not a valid shelling (step " +
                                std::to_string(res.failing_step) + ")");
  for (std::size_t i = 1; i < res.cert.classification.size(); ++i)
    if (res.cert.classification[i] == FacetKind::Structural)
      fail(ErrorKind::Domain, "build_km_tree: structural facet at step " +
                                  std::to_string(i + 1));
  KmTree t;
  t.r = r;
  t.order = res.cert.order;
  t.root = face_intersect(t.order[0], t.order[1]);
  if (t.root.size() != static_cast<std::size_t>(r / 2))
    fail(ErrorKind::Domain, "build_km_tree: |F_1 cap F_2| != r/2");

  Face covered;  // vertices seen so far
  for (std::size_t j = 0; j < t.order.size(); ++j) {
    const Face& f = t.order[j];
    Face fresh = face_diff(f, covered);
    covered = face_union(covered, f);
    if (j == 0) {
      // F_1 is indexed by its vertex outside the root
      Face extra = face_diff(f, t.root);
      t.added_vertex.push_back(extra.at(0));
    } else {
      if (fresh.size() != 1)
        fail(ErrorKind::Internal, "build_km_tree: vertex-adding step adds != 1 vertex");
      t.added_vertex.push_back(fresh[0]);
    }
    if (face_subset(t.root, f)) {
      t.parent.push_back(0);
      t.parent_label.push_back(0);
      continue;
    }
    // attachment face: F_j minus the vertex it adds
    Face attach = face_diff(f, Face{t.added_vertex.back()});
    int parent = -1;
    for (std::size_t i = 0; i < j; ++i)
      if (face_subset(attach, t.order[i])) {
        parent = static_cast<int>(i);
        break;
      }
    if (parent < 0)
      fail(ErrorKind::Internal, "build_km_tree: no parent facet contains the attachment face");
    Face label = face_diff(t.order[parent], f);
    if (label.size() != 1)
      fail(ErrorKind::Internal, "build_km_tree: parent label is not a single vertex");
    t.parent.push_back(parent + 1);
    t.parent_label.push_back(label[0]);
  }

  // permutation taking the root to {1..r/2}; remaining vertices keep order
  int n = 0;
  for (int v : covered) n = std::max(n, v);
  t.relabel.assign(n + 1, 0);
  int next = 1;
  for (int v : t.root) t.relabel[v] = next++;
  for (int v = 1; v <= n; ++v)
    if (t.relabel[v] == 0 &&
        std::binary_search(covered.begin(), covered.end(), v))
      t.relabel[v] = next++;
  return t;
}

namespace {

// Facet nodes reachable from `start` (0 = root) along directed edges whose
// labels avoid `blocked`. Root edges are unlabeled and never blocked.
int count_reachable(const KmTree& t, int start, int blocked) {
  std::vector<int> stack = {start};
  std::vector<char> seen(t.facet_count() + 1, 0);
  seen[start] = 1;
  int count = 0;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    for (int j = 1; j <= t.facet_count(); ++j) {
      if (seen[j] || t.parent[j - 1] != node) continue;
      if (t.parent[j - 1] != 0 && t.parent_label[j - 1] == blocked) continue;
      seen[j] = 1;
      ++count;
      stack.push_back(j);
    }
  }
  return count;
}

}  // namespace

std::map<int, int> tree_degrees(const KmTree& t, int r) {
  if (r != t.r) fail(ErrorKind::Domain, "tree_degrees: r mismatch with tree");
  std::map<int, int> deg;
  for (int v : t.root) deg[v] = r / 2 - 1 + count_reachable(t, 0, v);
  for (int j = 1; j <= t.facet_count(); ++j) {
    int v = t.added_vertex[j - 1];
    deg[v] = r / 2 + count_reachable(t, j, v);
  }
  return deg;
}

bool check_branch_lemma(const KmTree& t, int r) {
  if (r != t.r) fail(ErrorKind::Domain, "check_branch_lemma: r mismatch with tree");
  if (t.facet_count() != r / 2 + 2)
    fail(ErrorKind::Domain, "check_branch_lemma: tree must have r/2+2 non-root nodes");
  int root_degree = 0;
  Face labels;
  for (int j = 1; j <= t.facet_count(); ++j) {
    if (t.parent[j - 1] == 0)
      ++root_degree;
    else
      labels.push_back(t.parent_label[j - 1]);
  }
  if (root_degree != 2) return false;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels == t.root;
}

SimplicialComplex reconstruct_complex(const KmTree& t) {
  std::vector<Face> facets;
  int n = 0;
  for (int j = 1; j <= t.facet_count(); ++j) {
    // facet = (root union vertices added along the path) minus path labels
    Face verts = t.root;
    Face labels;
    for (int node = j; node != 0; node = t.parent[node - 1]) {
      verts = face_union(verts, Face{t.added_vertex[node - 1]});
      if (t.parent[node - 1] != 0) labels.push_back(t.parent_label[node - 1]);
    }
    std::sort(labels.begin(), labels.end());
    Face f = face_diff(verts, labels);
    for (int v : f) n = std::max(n, v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex(n, std::move(facets));
}

namespace {

nlohmann::json subtree_json(const KmTree& t, int node) {
  nlohmann::json children = nlohmann::json::array();
  for (int j = 1; j <= t.facet_count(); ++j) {
    if (t.parent[j - 1] != node) continue;
    nlohmann::json child = subtree_json(t, j);
    child["vertex_added"] = t.added_vertex[j - 1];
    if (t.parent[j - 1] == 0)
      child["label"] = nullptr;
    else
      child["label"] = t.parent_label[j - 1];
    children.push_back(child);
  }
  nlohmann::json j;
  j["children"] = children;
  return j;
}

}  // namespace

std::string km_tree_json(const KmTree& t) {
  nlohmann::json j = subtree_json(t, 0);
  j["root"] = t.root;
  nlohmann::json relabel = nlohmann::json::object();
  for (std::size_t v = 1; v < t.relabel.size(); ++v)
    if (t.relabel[v] != 0) relabel[std::to_string(v)] = t.relabel[v];
  j["relabeling"] = relabel;
  return j.dump();
}

std::string km_tree_dot(const KmTree& t) {
  std::ostringstream out;
  out << "digraph kmtree {\n  root [label=\"{";
  for (std::size_t k = 0; k < t.root.size(); ++k)
    out << (k ? "," : "") << t.root[k];
  out << "}\"];\n";
  for (int j = 1; j <= t.facet_count(); ++j)
    out << "  n" << j << " [label=\"F*_" << t.added_vertex[j - 1] << "\"];\n";
  for (int j = 1; j <= t.facet_count(); ++j) {
    if (t.parent[j - 1] == 0)
      out << "  root -> n" << j << ";\n";
    else
      out << "  n" << t.parent[j - 1] << " -> n" << j << " [label=\""
          << t.parent_label[j - 1] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace shellar
