// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>
#include <vector>

#include "gdt/codec.hpp"
#include "gdt/cutsets.hpp"
#include "gdt/detect.hpp"
#include "gdt/generate.hpp"
#include "gdt/pipeline.hpp"
#include "gdt/prime.hpp"
#include "gdt/rankwidth.hpp"
#include "gdt/recognize.hpp"
#include "gdt/reference.hpp"
#include "gdt/treewidth.hpp"
#include "gdt/verify.hpp"

using namespace gdt;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1) g.add_edge(u, v);
  return g;
}

Graph subdivided_k4() {
  Graph g = complete_graph(4);
  for (auto [u, v] :
       std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
    g = subdivide_edge(g, u, v);
  return g;
}

// Connected graph of the requested class, n <= 14, by rejection sampling.
Graph class_member(Rng& rng, GraphClass cls) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    Graph g;
    switch (rng.below(3)) {
      case 0:
        g = theta_chain(2 + (int)rng.below(2), rng.next(), true);
        break;
      case 1: {
        Graph a = subdivide_random_edges(
            random_two_connected_graph(4 + (int)rng.below(2), 45, rng.next()),
            2 + (int)rng.below(3), rng.next());
        Graph b = theta_chain(2, rng.next(), true);
        if (a.vertex_count() + b.vertex_count() > 15) continue;
        g = glue_on_clique(a, b, 1);
        break;
      }
      default: {
        Graph a = subdivide_random_edges(random_two_connected_graph(4, 50, rng.next()), 2,
                                         rng.next());
        Graph b = subdivide_random_edges(random_two_connected_graph(4, 50, rng.next()), 2,
                                         rng.next());
        g = glue_on_pair(a, 0, 2, b, 0, 2);
        break;
      }
    }
    if (g.vertex_count() > 14 || components(g).size() != 1) continue;
    if (in_class(g, cls) == Tri::kYes) return g;
  }
  throw std::runtime_error("class_member: sampling stalled");
}

// 1. Subdividing any single edge of a tw >= 2 graph preserves treewidth.
void criterion_subdivision() {
  Rng rng(101);
  int checked = 0;
  std::string detail;
  while (checked < 500) {
    Graph g = random_connected_graph(4 + (int)rng.below(7), 40, rng.next());
    if (treewidth_exact(g).width() < 2) continue;
    int before = treewidth_exact(g).width();
    for (auto [u, v] : g.edges()) {
      int after = treewidth_exact(subdivide_edge(g, u, v)).width();
      if (after != before) {
        detail = "tw " + std::to_string(before) + " -> " + std::to_string(after);
        break;
      }
    }
    if (!detail.empty()) break;
    ++checked;
  }
  report(1, "subdivision invariance (500 graphs, every edge)", detail.empty(), detail);
}

// 2. Treewidth equals the maximum over clique-cutset atoms.
void criterion_clique_cutset() {
  Rng rng(202);
  std::string detail;
  for (int i = 0; i < 200 && detail.empty(); ++i) {
    Graph g = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
    for (int p = 0; p < 2; ++p) {
      Graph piece = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
      if (g.vertex_count() + piece.vertex_count() > 14) break;
      g = glue_on_clique(g, piece, 1 + (int)rng.below(2));
    }
    int whole = treewidth_exact(g).width();
    int best = -1;
    for (const Atom& a : clique_cutset_atoms(g))
      best = std::max(best, treewidth_exact(a.graph).width());
    if (whole != best)
      detail = "tw(g)=" + std::to_string(whole) + " atoms=" + std::to_string(best);
  }
  report(2, "clique-cutset law (200 glued graphs)", detail.empty(), detail);
}

// 3. At every 2-cutset of a 1-cutset-free graph, tw(g) equals the max
// closure treewidth, for cl and for cl*.
void criterion_closures() {
  Rng rng(303);
  int checked = 0;
  std::string detail;
  while (checked < 200 && detail.empty()) {
    Graph a = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
    Graph b = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
    Graph g = glue_on_pair(a, 0, 1 + (int)rng.below(a.vertex_count() - 1), b, 0,
                           1 + (int)rng.below(b.vertex_count() - 1));
    if (g.vertex_count() > 12) continue;
    if (!find_one_cutsets(g).empty()) continue;
    auto cuts = find_two_cutsets(g);
    if (cuts.empty()) continue;
    int whole = treewidth_exact(g).width();
    for (const CutsetFinding& cut : cuts) {
      int u = lowest_vertex(cut.witness);
      int v = lowest_vertex(cut.witness & ~bit(u));
      int plain = -1, strong = -1;
      for (VSet comp : cut.side_components) {
        plain = std::max(plain, treewidth_exact(closure(g, u, v, comp).graph).width());
        strong = std::max(strong, treewidth_exact(strong_closure(g, u, v, comp).graph).width());
      }
      if (plain != whole || strong != whole) {
        detail = "tw(g)=" + std::to_string(whole) + " cl=" + std::to_string(plain) +
                 " cl*=" + std::to_string(strong);
        break;
      }
    }
    ++checked;
  }
  report(3, "2-cutset closure laws (200 graphs, cl and cl*)", detail.empty(), detail);
}

// 4. Prime decomposition preserves treewidth, stepwise, per class filter.
void criterion_prime_base() {
  std::string detail;
  for (GraphClass cls :
       {GraphClass::kAllGraphs, GraphClass::kIsk4WheelFree, GraphClass::kUniqueChordFree}) {
    Rng rng(404 + (int)cls);
    for (int i = 0; i < 200 && detail.empty(); ++i) {
      Graph g;
      if (cls == GraphClass::kAllGraphs) {
        g = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
        Graph piece = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
        if (g.vertex_count() + piece.vertex_count() <= 14)
          g = rng.chance(50) ? glue_on_clique(g, piece, 1 + (int)rng.below(2))
                             : glue_on_pair(g, 0, 1 + (int)rng.below(g.vertex_count() - 1),
                                            piece, 0, 1 + (int)rng.below(piece.vertex_count() - 1));
      } else {
        g = class_member(rng, cls);
      }
      auto rep = verify_prime_base_theorem(g, cls);
      if (!rep.equal || !rep.stepwise_equal)
        detail = to_string(cls) + ": tw(input)=" + std::to_string(rep.input_tw) +
                 " tw(base)=" + std::to_string(rep.base_tw) +
                 (rep.stepwise_equal ? "" : " (stepwise break)");
    }
  }
  report(4, "prime-base theorem (200 composites per class filter)", detail.empty(), detail);
}

// 5. rw of a 1-join composition equals the max over the two blocks.
void criterion_one_join_rw() {
  Rng rng(505);
  std::string detail;
  for (int i = 0; i < 100 && detail.empty(); ++i) {
    Graph gx = random_connected_graph(3 + (int)rng.below(4), 50, rng.next());
    Graph gy = random_connected_graph(3 + (int)rng.below(4), 50, rng.next());
    Graph g = compose_one_join(gx, (int)rng.below(gx.vertex_count()), gy,
                               (int)rng.below(gy.vertex_count()));
    int whole = rankwidth_exact(g).width();
    int blocks = std::max(rankwidth_exact(gx).width(), rankwidth_exact(gy).width());
    if (whole != blocks)
      detail = "rw(g)=" + std::to_string(whole) + " blocks=" + std::to_string(blocks);
  }
  report(5, "1-join rankwidth (100 compositions)", detail.empty(), detail);
}

// 6. tw(L(G)) <= (tw(G)+1) * Delta(G) - 1.
void criterion_line_graph_bound() {
  Rng rng(606);
  int checked = 0;
  std::string detail;
  while (checked < 200 && detail.empty()) {
    Graph g = random_connected_graph(5 + (int)rng.below(6), 30, rng.next());
    if (g.edge_count() < 2 || g.edge_count() > 15) continue;
    int twl = treewidth_exact(line_graph(g)).width();
    int bound = (treewidth_exact(g).width() + 1) * g.max_degree() - 1;
    if (twl > bound) detail = "tw(L)=" + std::to_string(twl) + " > " + std::to_string(bound);
    ++checked;
  }
  report(6, "line-graph treewidth bound (200 graphs)", detail.empty(), detail);
}

// 7. Both hereditary classes are 2-cutset-safe: at every nonadjacent
// 2-cutset of a 1-cutset-free member, every cl*(C) stays in the class.
// (Adjacent pairs are clique cutsets, handled by the odd decomposition
// steps, and the lemma's proof does not cover them.)
void criterion_safety() {
  std::string detail;
  for (GraphClass cls : {GraphClass::kIsk4WheelFree, GraphClass::kUniqueChordFree}) {
    Rng rng(707 + (int)cls);
    int checked = 0;
    while (checked < 100 && detail.empty()) {
      Graph a = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
      Graph b = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
      Graph g = glue_on_pair(a, 0, 1 + (int)rng.below(a.vertex_count() - 1), b, 0,
                             1 + (int)rng.below(b.vertex_count() - 1));
      if (in_class(g, cls) != Tri::kYes) continue;
      if (!find_one_cutsets(g).empty()) continue;
      bool any = false;
      for (const CutsetFinding& cut : find_two_cutsets(g)) {
        int u = lowest_vertex(cut.witness);
        int v = lowest_vertex(cut.witness & ~bit(u));
        if (g.has_edge(u, v)) continue;
        any = true;
        for (VSet comp : cut.side_components)
          if (in_class(strong_closure(g, u, v, comp).graph, cls) != Tri::kYes)
            detail = to_string(cls) + ": cl* leaves the class at {" + std::to_string(u) +
                     "," + std::to_string(v) + "}";
      }
      if (any) ++checked;
    }
  }
  report(7, "2-cutset safety (100 members per class, cl*)", detail.empty(), detail);
}

// 8. Graphs without a proper 1-join stay that way across decomposition:
// blocks of 1-cutsets, and strong closures at nonadjacent proper 2-cutsets
// (modulo 1-joins through the subdivision marker, which do not lift).
void criterion_one_join_preservation() {
  Rng rng(808);
  int checked = 0;
  std::string detail;
  while (checked < 100 && detail.empty()) {
    Graph g;
    if (rng.chance(50)) {
      g = glue_on_clique(random_connected_graph(4 + (int)rng.below(3), 50, rng.next()),
                         random_connected_graph(4 + (int)rng.below(3), 50, rng.next()), 1);
    } else {
      Graph a = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
      Graph b = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
      g = glue_on_pair(a, 0, 1 + (int)rng.below(a.vertex_count() - 1), b, 0,
                       1 + (int)rng.below(b.vertex_count() - 1));
    }
    if (find_proper_one_join(g).finding) continue;
    bool any = false;
    for (int u : find_one_cutsets(g)) {
      any = true;
      for (VSet comp : components_within(g, g.vertices() & ~bit(u)))
        if (find_proper_one_join(induced_subgraph(g, comp | bit(u))).finding)
          detail = "block at 1-cutset " + std::to_string(u) + " gained a proper 1-join";
    }
    for (const CutsetFinding& cut : find_proper_two_cutsets(g)) {
      int u = lowest_vertex(cut.witness);
      int v = lowest_vertex(cut.witness & ~bit(u));
      if (g.has_edge(u, v)) continue;
      any = true;
      for (VSet comp : cut.side_components) {
        Closure sc = strong_closure(g, u, v, comp);
        if (find_proper_one_join_avoiding(sc.graph, sc.marker).finding)
          detail = "cl* at {" + std::to_string(u) + "," + std::to_string(v) +
                   "} gained a marker-free proper 1-join";
      }
    }
    if (any) ++checked;
  }
  report(8, "1-join preservation (100 graphs, blocks and cl*)", detail.empty(), detail);
}

// 9. Structure theorems cover every connected member, exhaustively, n <= 7.
void criterion_coverage() {
  std::string detail;
  for (int n = 1; n <= 7 && detail.empty(); ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (components(g).size() != 1) continue;
      if (in_class(g, GraphClass::kIsk4WheelFree) == Tri::kYes) {
        bool covered = recognize_basic_isk4(g).kind != BasicClass::kNone ||
                       find_clique_cutset(g).has_value() ||
                       !find_proper_two_cutsets(g).empty();
        if (!covered) {
          detail = "isk4 class, n=" + std::to_string(n) + " g6=" + graph6_write(g);
          break;
        }
      }
      if (in_class(g, GraphClass::kUniqueChordFree) == Tri::kYes) {
        bool covered = recognize_basic_unique_chord(g).kind != BasicClass::kNone ||
                       !find_one_cutsets(g).empty() || !find_proper_two_cutsets(g).empty() ||
                       find_proper_one_join(g).finding.has_value();
        if (!covered) {
          detail = "unique-chord class, n=" + std::to_string(n) + " g6=" + graph6_write(g);
          break;
        }
      }
    }
  }
  report(9, "structure-theorem coverage (all connected graphs n <= 7)", detail.empty(),
         detail);
}

// 10. Detectors agree with subset oracles (n <= 7); treewidth agrees with
// the elimination-ordering oracle (n <= 6).
void criterion_oracles() {
  std::string detail;
  for (int n = 0; n <= 7 && detail.empty(); ++n) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (detect_isk4(g).found() != reference::isk4_by_subsets(g).has_value() ||
          detect_wheel(g).found() != reference::wheel_by_subsets(g).has_value() ||
          detect_unique_chord_cycle(g).found() !=
              reference::unique_chord_cycle_by_subsets(g).has_value()) {
        detail = "detector disagreement on " + graph6_write(g);
        break;
      }
      if (n <= 6 &&
          treewidth_exact(g).width() != reference::treewidth_by_elimination_orderings(g)) {
        detail = "treewidth disagreement on " + graph6_write(g);
        break;
      }
    }
  }
  report(10, "oracle agreement (detectors n <= 7, treewidth n <= 6)", detail.empty(), detail);
}

// 11. Named values, each reproduced by its independent oracle.
void criterion_named_values() {
  std::string detail;
  if (treewidth_exact(petersen()).width() != 4 ||
      reference::treewidth_by_elimination_orderings(petersen()) != 4)
    detail = "tw(Petersen) != 4";
  else if (treewidth_exact(complete_bipartite(3, 3)).width() != 3 ||
           reference::treewidth_by_elimination_orderings(complete_bipartite(3, 3)) != 3)
    detail = "tw(K33) != 3";
  else if (rankwidth_exact(cycle_graph(5)).width() != 2 ||
           reference::rankwidth_by_tree_enumeration(cycle_graph(5)) != 2)
    detail = "rw(C5) != 2";
  else if (ramsey_upper(3).upper != 6)
    detail = "ramsey_upper(3) != 6";
  else {
    // R(3,3) = 6 exhaustively: C5 is triangle- and co-triangle-free, and
    // no 6-vertex graph is.
    Graph c5 = cycle_graph(5);
    if (detect_clique(c5, 3) || detect_clique(complement(c5), 3))
      detail = "C5 fails as the R(3,3) lower-bound witness";
    for (std::uint64_t mask = 0; mask < (1u << 15) && detail.empty(); ++mask) {
      Graph g = graph_from_mask(6, mask);
      if (!detect_clique(g, 3) && !detect_clique(complement(g), 3))
        detail = "6-vertex Ramsey counterexample " + graph6_write(g);
    }
  }
  report(11, "named values against independent oracles", detail.empty(), detail);
}

// 12. End-to-end pipelines on the curated corpus.  t = 3 except where a
// member contains a triangle (then the smallest t keeping it t-clean).
void criterion_pipelines() {
  std::string detail;
  auto expect_concrete = [](BasicClass kind, int t) -> std::optional<int> {
    switch (kind) {
      case BasicClass::kSeriesParallel: return 2;
      case BasicClass::kCompleteBipartite: return t;
      case BasicClass::kLongRichSquare: return 5;
      case BasicClass::kHoleAtLeast7: return 3;
      case BasicClass::kPetersenEmbedded: return 10;
      case BasicClass::kHeawoodEmbedded: return 14;
      case BasicClass::kClique: return t;
      default: return std::nullopt;  // computed or symbolic-only cases
    }
  };
  auto run = [&](const Graph& g, int t, bool isk4) {
    if (!detail.empty()) return;
    try {
      BoundReport rep = isk4 ? pipeline_isk4(g, t) : pipeline_unique_chord(g, t);
      std::string tag = std::string(isk4 ? "isk4" : "unique-chord") + " on " + graph6_write(g);
      if (!rep.ok()) {
        detail = tag + ": " + rep.verdict;
        return;
      }
      if (auto want = expect_concrete(rep.base_label.kind, t))
        if (rep.concrete_bound != want) {
          detail = tag + ": bound " + std::to_string(rep.concrete_bound.value_or(-1)) +
                   " != " + std::to_string(*want) + " for " + to_string(rep.base_label.kind);
          return;
        }
      if (rep.concrete_bound && rep.base_tw > *rep.concrete_bound) {
        detail = tag + ": tw(base) exceeds the concrete bound";
        return;
      }
      // Joins preserve rankwidth, not treewidth, so the tw(input)=tw(base)
      // identity is asserted only on join-free runs.
      if (rep.join_reductions == 0 && rep.input_tw && *rep.input_tw != rep.base_tw)
        detail = tag + ": tw(input) != tw(base)";
    } catch (const std::exception& e) {
      detail = std::string(isk4 ? "isk4" : "unique-chord") + ": exception: " + e.what();
    }
  };

  // ISK4-wheel-free corpus.
  run(cycle_graph(6), 3, true);
  run(cycle_graph(7), 3, true);
  run(path_graph(7), 3, true);
  run(glue_on_pair(cycle_graph(6), 0, 3, cycle_graph(6), 0, 3), 3, true);
  run(glue_on_clique(cycle_graph(6), cycle_graph(5), 1), 3, true);
  run(complete_bipartite(3, 3), 4, true);  // contains no K3 but t=3 forbids K33 itself
  run(complete_bipartite(3, 4), 4, true);
  // Squares with a single attachment path are the wheel-free long rich
  // squares (two or more paths force a wheel through both of them).
  run(long_rich_square_graph({2}, 3), 4, true);         // triangles at the square
  run(long_rich_square_graph({4}, 3), 4, true);
  run(line_graph(subdivided_k4()), 4, true);            // line graphs have triangles

  // Unique-chord-free corpus.
  run(cycle_graph(7), 3, false);
  run(cycle_graph(9), 3, false);
  run(petersen(), 3, false);
  run(heawood(), 3, false);
  run(subdivided_k4(), 3, false);
  run(strongly_2bipartite_graph(5, 31), 3, false);
  run(complete_graph(2), 3, false);
  run(complete_graph(3), 4, false);  // K_t needs t > clique number
  run(complete_graph(4), 5, false);
  run(compose_one_join(complete_bipartite(1, 3), 0, complete_bipartite(1, 3), 0), 4, false);
  {
    Rng rng(1212);
    int used = 0;
    for (int i = 0; i < 200 && used < 5; ++i) {
      Graph g = theta_chain(3, rng.next(), true);
      if (components(g).size() != 1) continue;
      if (in_class(g, GraphClass::kUniqueChordFree) != Tri::kYes) continue;
      if (detect_clique(g, 3)) continue;  // keep t = 3 applicable
      run(g, 3, false);
      ++used;
    }
  }

  report(12, "end-to-end pipelines on the curated corpus", detail.empty(), detail);
}

}  // namespace

int main() {
  criterion_subdivision();
  criterion_clique_cutset();
  criterion_closures();
  criterion_prime_base();
  criterion_one_join_rw();
  criterion_line_graph_bound();
  criterion_safety();
  criterion_one_join_preservation();
  criterion_coverage();
  criterion_oracles();
  criterion_named_values();
  criterion_pipelines();
  std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAIL" : "OK", g_failures);
  return g_failures ? 1 : 0;
}
