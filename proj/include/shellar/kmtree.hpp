#pragma once

#include <map>
#include <string>
#include <vector>

#include "shellar/shelling.hpp"

namespace shellar {

// Facets of a pure complex as nodes, adjacent when they meet in m-1 vertices.
struct FacetAdjacencyGraph {
  int m = 0;
  std::vector<Face> nodes;
  std::vector<std::pair<int, int>> edges;  // indices into nodes

  int node_degree(int i) const {
    int d = 0;
    for (auto& e : edges)
      if (e.first == i || e.second == i) ++d;
    return d;
  }
};

FacetAdjacencyGraph facet_graph(const SimplicialComplex& c, int m);
std::string facet_graph_dot(const FacetAdjacencyGraph& fg);
std::string facet_graph_json(const FacetAdjacencyGraph& fg);

// Rooted directed labeled tree for a pure, structural-facet-free complex with
// facet size r/2+1. Node 0 is the root v = F_1 cap F_2; nodes 1..l are the
// facets in shelling order. Labels and vertices use the graph's original
// labels; `relabel` records the permutation taking the root to {1..r/2}.
struct KmTree {
  int r = 0;
  Face root;                       // F_1 cap F_2, sorted
  std::vector<Face> order;         // shelling order used
  std::vector<int> added_vertex;   // per facet: the vertex F*_j is indexed by
  std::vector<int> parent;         // per facet: 0 for root children, else facet index (1-based)
  std::vector<int> parent_label;   // per facet: 0 for unlabeled root edges
  std::vector<int> relabel;        // relabel[v] for v in 1..n

  int facet_count() const { return static_cast<int>(order.size()); }
};

KmTree build_km_tree(const SimplicialComplex& c, int r,
                     const std::vector<Face>& order);

// Vertex degrees of the underlying graph recovered via label-avoiding
// reachability in the tree.
std::map<int, int> tree_degrees(const KmTree& t, int r);

// For trees with exactly r/2 + 2 non-root nodes: root degree 2 and labeled
// edges in bijection with the root vertices.
bool check_branch_lemma(const KmTree& t, int r);

SimplicialComplex reconstruct_complex(const KmTree& t);

std::string km_tree_json(const KmTree& t);
std::string km_tree_dot(const KmTree& t);

}  // namespace shellar
