// Acceptance gate: one check per criterion, each printing a single
// PASS/FAIL line (with explanatory notes on failure). Run a single
// criterion with --criterion N, or everything with no arguments.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "shellar/census.hpp"
#include "shellar/complex.hpp"
#include "shellar/enumerate.hpp"
#include "shellar/graph6.hpp"
#include "shellar/iso.hpp"
#include "shellar/search.hpp"
#include "shellar/shelling.hpp"

using namespace shellar;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      notes.push_back(note);
    }
  }
  void info(const std::string& note) { notes.push_back(note); }
};

SimplicialComplex five_facet_example() {
  return SimplicialComplex(
      6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}});
}

// 1. The worked five-facet example yields restriction numbers (0,1,1,1,2).
Outcome criterion1() {
  Outcome out;
  std::vector<Face> order = {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}};
  ShellingResult res = verify_shelling(five_facet_example(), order);
  out.require(res.valid, "printed order is not accepted as a shelling");
  if (res.valid)
    out.require(res.cert.restriction == std::vector<int>{0, 1, 1, 1, 2},
                "restriction numbers differ from (0,1,1,1,2)");
  return out;
}

// 2. Certificate counting formulas equal direct face counts, n <= 7.
Outcome criterion2() {
  Outcome out;
  EnumOptions opts;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      auto cert = is_shellable(c);
      if (!cert) continue;
      ++checked;
      FVector f = f_vector(c);
      for (int t = 1; t <= n; ++t) {
        std::uint64_t direct =
            t <= static_cast<int>(f.entries.size()) ? f.entries[t - 1] : 0;
        if (face_count_by_size(*cert, t) != direct) {
          out.require(false, "size-" + std::to_string(t) +
                                 " count mismatch on " + canonical_graph6(g));
          return out;
        }
      }
      out.require(total_faces(*cert) == f.total() + 1,
                  "total-face mismatch on " + canonical_graph6(g));
    }
  out.info("verified " + std::to_string(checked) + " certificates");
  return out;
}

// 3. Decreasing-size decision procedure agrees with all-orders brute force.
Outcome criterion3() {
  Outcome out;
  EnumOptions opts;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      ++checked;
      if (is_shellable(c).has_value() != is_shellable_any_order(c)) {
        out.require(false, "disagreement on " + canonical_graph6(g));
        return out;
      }
    }
  out.info("agreed on " + std::to_string(checked) + " connected graphs");
  return out;
}

// 4. Non-shellability witnesses are rejected.
Outcome criterion4() {
  Outcome out;
  Graph cir = gen_circulant(8, {1, 2, 3});
  bool cir_shellable = is_shellable(clique_complex(cir)).has_value();
  out.require(!cir_shellable,
              "the 6-regular circulant on 8 vertices was NOT rejected");
  if (cir_shellable) {
    out.info("this graph is the complete multipartite K_{2,2,2,2}: every");
    out.info("maximal clique picks one vertex from each antipodal pair, so");
    out.info("its clique complex is the boundary of the 4-dimensional");
    out.info("cross-polytope, which is shellable (16 facets, not the 8");
    out.info("cyclic windows)");
    std::vector<Face> windows;
    for (int i = 0; i < 8; ++i) {
      Face f;
      for (int d = 0; d < 4; ++d) f.push_back((i + d) % 8 + 1);
      std::sort(f.begin(), f.end());
      windows.push_back(f);
    }
    bool window_shellable =
        is_shellable(SimplicialComplex(8, windows)).has_value();
    out.info(std::string("the cyclic window complex itself IS rejected: ") +
             (window_shellable ? "no (unexpected)" : "yes"));
  }
  Graph two(5);
  two.add_edge(1, 2);
  two.add_edge(2, 3);
  two.add_edge(1, 3);
  two.add_edge(4, 5);
  out.require(!is_shellable(clique_complex(two)).has_value(),
              "triangle plus disjoint edge was not rejected");
  return out;
}

// 5. Every structural facet in the n <= 7 sweep adds exactly one edge.
Outcome criterion5() {
  Outcome out;
  EnumOptions opts;
  std::uint64_t structural = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      auto cert = is_shellable(clique_complex(g));
      if (!cert) continue;
      for (std::size_t i = 0; i < cert->order.size(); ++i)
        if (cert->classification[i] == FacetKind::Structural) {
          ++structural;
          if (cert->edge_delta[i] != 1) {
            out.require(false, "structural facet with edge delta " +
                                   std::to_string(cert->edge_delta[i]) +
                                   " on " + canonical_graph6(g));
            out.info("a structural facet adds at most one edge (two or more");
            out.info("break the pure-intersection condition), but it can add");
            out.info("none: the closing triangles of the octahedron have all");
            out.info("their edges present already");
            return out;
          }
        }
    }
  out.info("checked " + std::to_string(structural) + " structural facets");
  return out;
}

// 6. Closed-form censuses match enumeration for r = 4 and r = 6.
Outcome criterion6() {
  Outcome out;
  for (int n = 5; n <= 40; ++n) {
    CliqueCensus c = enumerate_cliques(gen_cir_star(n, 4));
    for (int t = 1; t <= 3; ++t)
      out.require(cir_star_clique_count(n, 4, t) == c.count(t),
                  "r=4 t=" + std::to_string(t) + " n=" + std::to_string(n));
  }
  for (int n = 7; n <= 40; ++n) {
    CliqueCensus c = enumerate_cliques(gen_cir_star(n, 6));
    for (int t = 1; t <= 4; ++t)
      out.require(cir_star_clique_count(n, 6, t) == c.count(t),
                  "r=6 t=" + std::to_string(t) + " n=" + std::to_string(n));
  }
  return out;
}

// 7. Exactly one isomorphism class survives the uniqueness scan at r = 4.
Outcome criterion7() {
  Outcome out;
  nlohmann::json rep = verify_unique_km_tree(4, 100000000ULL);
  out.require(rep["class_count"].get<std::uint64_t>() == 1,
              "expected one class, found " + rep["class_count"].dump());
  out.require(rep["matches_cir_star"].get<bool>(),
              "surviving class is not the seven-vertex path power");
  return out;
}

// 8. Extension scans at n = 8, 9, 10 report no counterexamples.
Outcome criterion8() {
  Outcome out;
  for (int n : {8, 9, 10}) {
    nlohmann::json rep = verify_tendril(n, 4, 100000000ULL);
    out.require(rep["counterexamples"].empty(),
                "counterexample at n = " + std::to_string(n) + ": " +
                    rep["counterexamples"].dump());
    out.info("n=" + std::to_string(n) + ": " +
             rep["extensions_examined"].dump() + " extensions examined");
  }
  return out;
}

// 9. Ratio convergence in exact arithmetic.
Outcome criterion9() {
  Outcome out;
  const Rational tol(1, 100);
  {
    long long n = 500;
    std::uint64_t k = cir_star_total_cliques(static_cast<int>(n), 4);
    Rational gap(4 * n - static_cast<long long>(k), n);
    out.require(gap <= tol, "total-count gap at n=500 is " + gap.str() +
                                " > 1/100");
    out.info("k/n at n=500: gap " + gap.str());
  }
  {
    long long n = 200;
    std::uint64_t k2 = cir_star_clique_count(static_cast<int>(n), 4, 2);
    Rational gap(2 * n - static_cast<long long>(k2), n);
    out.require(gap <= tol,
                "edge-count gap at n=200 is " + gap.str() + " > 1/100");
    if (!(gap <= tol)) {
      out.info("k_2(n)/n = 2 - 3/n exactly, so the gap is 3/n; it first");
      out.info("reaches 1/100 at n = 300, not n = 200");
      Rational at300(2 * 300 - static_cast<long long>(
                                   cir_star_clique_count(300, 4, 2)),
                     300);
      out.info("gap at n=300: " + at300.str());
    }
  }
  return out;
}

// 10. Structural-facet cap for pure certificates in the n <= 7 sweep.
Outcome criterion10() {
  Outcome out;
  EnumOptions opts;
  std::uint64_t checked = 0, corrected_ok = 0;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_connected_graphs(n, opts)) {
      SimplicialComplex c = clique_complex(g);
      if (!is_pure(c)) continue;
      auto cert = is_shellable(c);
      if (!cert) continue;
      int r = g.max_degree();
      int s = static_cast<int>(cert->order.front().size());
      if (s > r / 2 + 1) continue;  // outside the bound's precondition
      ++checked;
      Rational w(cert->structural_count(), 1);
      Rational cap = structural_facet_bound(n, r, s);
      if (!(w <= cap))
        out.require(false, "violated by " + canonical_graph6(g) + ": w = " +
                               w.str() + " > " + cap.str() + " (n=" +
                               std::to_string(n) + ", r=" + std::to_string(r) +
                               ", s=" + std::to_string(s) + ")");
      // degree-budget form: count only structural facets that introduce an
      // edge, and charge the first facet its exact slack s(r-s+1)
      long long edge_adding = 0;
      for (std::size_t i = 0; i < cert->order.size(); ++i)
        if (cert->classification[i] == FacetKind::Structural)
          edge_adding += cert->edge_delta[i];
      Rational corrected(static_cast<long long>(s) * (r - s + 1) +
                             static_cast<long long>(n - s) * (r - 2 * s + 2),
                         2);
      if (Rational(edge_adding, 1) <= corrected) ++corrected_ok;
    }
  out.info("checked " + std::to_string(checked) + " pure certificates");
  out.info("degree-budget form (edge-adding structural facets only, first-");
  out.info("facet slack s(r-s+1)) held for " + std::to_string(corrected_ok) +
           "/" + std::to_string(checked));
  if (!out.pass) {
    out.info("two gaps in the stated cap: it charges only s(s-1) slack to");
    out.info("the first facet (exact slack is s(r-s+1); K_{3,3} with s=2,");
    out.info("r=3 forces w=4 against a cap of 3), and it charges every");
    out.info("structural facet two units of free degree although facets");
    out.info("adding no edge consume none (octahedron: w=4, cap 3)");
  }
  return out;
}

// 11. Binomial inequality sweep to a = 25.
Outcome criterion11() {
  Outcome out;
  nlohmann::json rep = verify_binom_lemma(25);
  out.require(rep["violations"].empty(),
              "violations: " + rep["violations"].dump());
  out.info("checked " + rep["checked"].dump() + " tuples");
  return out;
}

// 12. Four classical clique bounds hold exhaustively at n <= 7, each tight.
Outcome criterion12() {
  Outcome out;
  nlohmann::json rep = verify_classical_bounds(7, 100000000ULL);
  out.require(rep["total_violations"].get<std::uint64_t>() == 0,
              "violations found: " + rep["total_violations"].dump());
  for (const char* key :
       {"zykov", "kruskal_katona", "gan_loh_sudakov", "cutler_radcliffe"}) {
    bool any_tight = false;
    for (auto& entry : rep[key])
      if (!entry["tight_witnesses"].empty()) any_tight = true;
    out.require(any_tight, std::string("no tight witness for ") + key);
  }
  return out;
}

// 13. graph6 round-trip identity over every class with n <= 7.
Outcome criterion13() {
  Outcome out;
  EnumOptions opts;
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<Graph> classes = enumerate_graphs(n, opts);
    out.require(classes.size() == expected[n - 1],
                "class tally at n=" + std::to_string(n) + " is " +
                    std::to_string(classes.size()) + ", expected " +
                    std::to_string(expected[n - 1]));
    for (const Graph& g : classes) {
      std::string line = emit_graph6(g);
      if (!(parse_graph6(line) == g) || emit_graph6(parse_graph6(line)) != line) {
        out.require(false, "round trip failed for " + line);
        return out;
      }
    }
    total += classes.size();
  }
  out.require(total >= 1044, "fewer than 1044 classes covered");
  out.info("round-tripped " + std::to_string(total) + " classes");
  return out;
}

const char* kSummary[] = {
    "worked-example restriction numbers",
    "certificate counting formulas vs direct face counts (n <= 7)",
    "decreasing-order completeness vs all-orders brute force (n <= 6)",
    "non-shellability witnesses rejected",
    "structural facets add exactly one edge (n <= 7)",
    "closed-form censuses for the path powers (r = 4, 6)",
    "uniqueness scan at r = 4",
    "extension rigidity at n = 8, 9, 10",
    "ratio convergence within 1/100 in exact arithmetic",
    "structural-facet cap on pure certificates (n <= 7)",
    "binomial inequality sweep (a <= 25)",
    "classical clique bounds with tight witnesses (n <= 7)",
    "graph6 round-trip identity over all small classes",
};

Outcome run_criterion(int i) {
  switch (i) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    case 11: return criterion11();
    case 12: return criterion12();
    case 13: return criterion13();
  }
  std::fprintf(stderr, "no criterion %d\n", i);
  std::exit(2);
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  int failures = 0;
  for (int i = 1; i <= 13; ++i) {
    if (only && i != only) continue;
    Outcome out = run_criterion(i);
    std::printf("criterion %2d: %s — %s\n", i, out.pass ? "PASS" : "FAIL",
                kSummary[i - 1]);
    for (const std::string& note : out.notes)
      std::printf("              | %s\n", note.c_str());
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
