#include "gdt/verify.hpp"

#include <algorithm>
#include <sstream>

#include "gdt/cutsets.hpp"
#include "gdt/detect.hpp"
#include "gdt/generate.hpp"
#include "gdt/graph.hpp"
#include "gdt/prime.hpp"
#include "gdt/rankwidth.hpp"
#include "gdt/recognize.hpp"
#include "gdt/treewidth.hpp"

namespace gdt {

RamseyBound ramsey_upper(int t) {
  if (t < 2) throw InputError("ramsey_upper: need t >= 2");
  if (t > 32) throw InputError("ramsey_upper: t too large for 64-bit bound");
  // C(2t-2, t-1), the classical Erdos-Szekeres bound.
  std::uint64_t value = 1;
  for (int i = 1; i <= t - 1; ++i) value = value * (t - 1 + i) / i;
  return {t, value};
}

namespace {

enum class Outcome { kPass, kFail, kSkip };

struct Ctx {
  std::uint64_t seed;
  Budget budget;
  std::string detail;
  Outcome fail(const std::string& why) {
    detail = why;
    return Outcome::kFail;
  }
};

int tw(const Graph& g, Budget b, bool* exact) {
  auto r = treewidth_exact(g, b);
  if (!r.exact) *exact = false;
  return r.width();
}

// --- subdivision-tw: subdividing one edge preserves treewidth ---

Outcome suite_subdivision_tw(Ctx& c) {
  Rng rng(c.seed);
  Graph g = random_connected_graph(4 + (int)rng.below(7), 40, rng.next());
  if (g.edge_count() == 0) return Outcome::kSkip;
  auto es = g.edges();
  auto [u, v] = es[rng.below(es.size())];
  Graph sub = subdivide_edge(g, u, v);
  bool exact = true;
  int before = tw(g, c.budget, &exact), after = tw(sub, c.budget, &exact);
  if (!exact) return Outcome::kSkip;
  if (before != after)
    return c.fail("tw changed from " + std::to_string(before) + " to " + std::to_string(after));
  return Outcome::kPass;
}

// --- clique-cutset-tw: tw equals the max over clique-cutset atoms ---

Graph glued_composite(Rng& rng, int pieces, bool pairs_too) {
  Graph g = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
  for (int i = 0; i < pieces; ++i) {
    Graph p = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
    if (g.vertex_count() + p.vertex_count() > 14) break;
    if (pairs_too && rng.chance(50)) {
      int v1 = 1 + (int)rng.below(g.vertex_count() - 1);
      int v2 = 1 + (int)rng.below(p.vertex_count() - 1);
      g = glue_on_pair(g, 0, v1, p, 0, v2);
    } else {
      int k = 1 + (int)rng.below(2);
      try {
        g = glue_on_clique(g, p, k);
      } catch (const InputError&) {
        g = glue_on_clique(g, p, 1);
      }
    }
  }
  return g;
}

Outcome suite_clique_cutset_tw(Ctx& c) {
  Rng rng(c.seed);
  Graph g = glued_composite(rng, 2, false);
  bool exact = true;
  int whole = tw(g, c.budget, &exact);
  int best = -1;
  for (const Atom& a : clique_cutset_atoms(g, c.budget))
    best = std::max(best, tw(a.graph, c.budget, &exact));
  if (!exact) return Outcome::kSkip;
  if (whole != best)
    return c.fail("tw(g)=" + std::to_string(whole) + " but atom max=" + std::to_string(best));
  return Outcome::kPass;
}

// --- two-cutset-closure / two-cutset-strong-closure ---

Graph pair_glued(Rng& rng) {
  Graph a = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
  Graph b = random_two_connected_graph(4 + (int)rng.below(3), 55, rng.next());
  int v1 = 1 + (int)rng.below(a.vertex_count() - 1);
  int v2 = 1 + (int)rng.below(b.vertex_count() - 1);
  return glue_on_pair(a, 0, v1, b, 0, v2);
}

Outcome closure_suite(Ctx& c, bool strong) {
  Rng rng(c.seed);
  Graph g = pair_glued(rng);
  if (!find_one_cutsets(g).empty()) return Outcome::kSkip;  // lemma needs no 1-cutset
  auto cuts = find_two_cutsets(g);
  if (cuts.empty()) return Outcome::kSkip;
  bool exact = true;
  int whole = tw(g, c.budget, &exact);
  for (const CutsetFinding& cut : cuts) {
    int u = lowest_vertex(cut.witness);
    int v = lowest_vertex(cut.witness & ~bit(u));
    int best = -1;
    for (VSet comp : cut.side_components) {
      Closure cl = strong ? strong_closure(g, u, v, comp) : closure(g, u, v, comp);
      best = std::max(best, tw(cl.graph, c.budget, &exact));
    }
    if (!exact) return Outcome::kSkip;
    if (best != whole)
      return c.fail("cutset {" + std::to_string(u) + "," + std::to_string(v) + "}: tw(g)=" +
                    std::to_string(whole) + " closure max=" + std::to_string(best));
  }
  return Outcome::kPass;
}

Outcome suite_closure(Ctx& c) { return closure_suite(c, false); }
Outcome suite_strong_closure(Ctx& c) { return closure_suite(c, true); }

// --- prime-base: tw preserved along the whole decomposition trace ---

Outcome suite_prime_base(Ctx& c) {
  Rng rng(c.seed);
  Graph g = glued_composite(rng, 2, true);
  auto rep = verify_prime_base_theorem(g, GraphClass::kAllGraphs, c.budget);
  if (!rep.equal)
    return c.fail("tw(input)=" + std::to_string(rep.input_tw) + " tw(base)=" +
                  std::to_string(rep.base_tw) + (rep.stepwise_equal ? "" : " (stepwise break)"));
  return Outcome::kPass;
}

// --- one-join-rw: rw(G) = max(rw(X + b), rw(Y + a)) ---

Outcome suite_one_join_rw(Ctx& c) {
  Rng rng(c.seed);
  Graph gx = random_connected_graph(3 + (int)rng.below(4), 50, rng.next());
  Graph gy = random_connected_graph(3 + (int)rng.below(4), 50, rng.next());
  Graph g = compose_one_join(gx, (int)rng.below(gx.vertex_count()), gy,
                             (int)rng.below(gy.vertex_count()));
  // The composed graph's 1-join blocks are gx and gy themselves.
  auto rg = rankwidth_exact(g, c.budget);
  auto rx = rankwidth_exact(gx, c.budget), ry = rankwidth_exact(gy, c.budget);
  if (!rg.exact || !rx.exact || !ry.exact) return Outcome::kSkip;
  if (rg.width() != std::max(rx.width(), ry.width()))
    return c.fail("rw(g)=" + std::to_string(rg.width()) + " blocks=" +
                  std::to_string(rx.width()) + "," + std::to_string(ry.width()));
  return Outcome::kPass;
}

// --- line-graph-bound: tw(L(G)) <= (tw(G)+1) Delta(G) - 1 ---

Outcome suite_line_graph_bound(Ctx& c) {
  Rng rng(c.seed);
  Graph g = random_connected_graph(5 + (int)rng.below(5), 30, rng.next());
  if (g.edge_count() < 2 || g.edge_count() > 15) return Outcome::kSkip;
  Graph l = line_graph(g);
  bool exact = true;
  int twg = tw(g, c.budget, &exact), twl = tw(l, c.budget, &exact);
  if (!exact) return Outcome::kSkip;
  int bound = (twg + 1) * g.max_degree() - 1;
  if (twl > bound)
    return c.fail("tw(L)=" + std::to_string(twl) + " bound=" + std::to_string(bound));
  return Outcome::kPass;
}

// --- 2-cutset-safety of the two hereditary classes ---

Outcome safety_suite(Ctx& c, GraphClass cls) {
  Rng rng(c.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g = rng.chance(60) ? pair_glued(rng)
                             : random_two_connected_graph(6 + (int)rng.below(4), 35, rng.next());
    Tri member = in_class(g, cls, c.budget);
    if (member != Tri::kYes) continue;
    if (!find_one_cutsets(g).empty()) continue;
    auto cuts = find_two_cutsets(g);
    if (cuts.empty()) continue;
    for (const CutsetFinding& cut : cuts) {
      int u = lowest_vertex(cut.witness);
      int v = lowest_vertex(cut.witness & ~bit(u));
      for (VSet comp : cut.side_components) {
        Tri plain = in_class(closure(g, u, v, comp).graph, cls, c.budget);
        Tri strong = in_class(strong_closure(g, u, v, comp).graph, cls, c.budget);
        if (plain == Tri::kUnknown || strong == Tri::kUnknown) return Outcome::kSkip;
        if (plain != Tri::kYes && strong != Tri::kYes)
          return c.fail("cutset {" + std::to_string(u) + "," + std::to_string(v) +
                        "}: neither closure stays in " + to_string(cls));
      }
    }
    return Outcome::kPass;
  }
  return Outcome::kSkip;
}

Outcome suite_isk4_safe(Ctx& c) { return safety_suite(c, GraphClass::kIsk4WheelFree); }
Outcome suite_unique_chord_safe(Ctx& c) { return safety_suite(c, GraphClass::kUniqueChordFree); }

// --- 1-join preservation under 1-cutsets and proper 2-cutsets ---

Outcome suite_one_join_after_one_cutset(Ctx& c) {
  Rng rng(c.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph a = random_connected_graph(4 + (int)rng.below(3), 50, rng.next());
    Graph b = random_connected_graph(4 + (int)rng.below(3), 50, rng.next());
    Graph g = glue_on_clique(a, b, 1);
    auto whole = find_proper_one_join(g, c.budget);
    if (!whole.exhaustive) return Outcome::kSkip;
    if (whole.finding) continue;  // lemma premise: no proper 1-join
    for (int u : find_one_cutsets(g)) {
      for (VSet comp : components_within(g, g.vertices() & ~bit(u))) {
        Graph block = induced_subgraph(g, comp | bit(u));
        auto r = find_proper_one_join(block, c.budget);
        if (!r.exhaustive) return Outcome::kSkip;
        if (r.finding)
          return c.fail("block of 1-cutset " + std::to_string(u) + " has a proper 1-join");
      }
    }
    return Outcome::kPass;
  }
  return Outcome::kSkip;
}

Outcome suite_one_join_after_two_cutset(Ctx& c) {
  Rng rng(c.seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g = pair_glued(rng);
    auto whole = find_proper_one_join(g, c.budget);
    if (!whole.exhaustive) return Outcome::kSkip;
    if (whole.finding) continue;
    auto cuts = find_proper_two_cutsets(g);
    if (cuts.empty()) continue;
    bool tested = false;
    for (const CutsetFinding& cut : cuts) {
      int u = lowest_vertex(cut.witness);
      int v = lowest_vertex(cut.witness & ~bit(u));
      // The proof assumes u, v nonadjacent (true wherever the lemma is
      // applied: even decomposition steps see no clique cutset); for an
      // adjacent pair, A = {u, v} is stable in cl*(C) but not in g.
      if (g.has_edge(u, v)) continue;
      tested = true;
      for (VSet comp : cut.side_components) {
        // Corrected form of the lemma: a proper 1-join of cl*(C) lifts
        // back to g only when A and B avoid the subdivision marker (a
        // single-vertex component closes to a C4 whose sole proper
        // 1-join runs through the marker, and g need not have one).
        Closure sc = strong_closure(g, u, v, comp);
        auto r = find_proper_one_join_avoiding(sc.graph, sc.marker, c.budget);
        if (!r.exhaustive) return Outcome::kSkip;
        if (r.finding)
          return c.fail("strong closure at {" + std::to_string(u) + "," + std::to_string(v) +
                        "} has a marker-free proper 1-join");
      }
    }
    if (tested) return Outcome::kPass;
  }
  return Outcome::kSkip;
}

// --- ramsey-tw-rw: the section 4 corollary with t = 3 ---

Outcome suite_ramsey_tw_rw(Ctx& c) {
  Rng rng(c.seed);
  const int t = 3;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Graph g = random_graph(7 + (int)rng.below(4), 25, rng.next());
    if (detect_clique(g, t) || detect_biclique(g, t)) continue;
    bool exact = true;
    int twg = tw(g, c.budget, &exact);
    auto rw = rankwidth_exact(g, c.budget);
    if (!exact || !rw.exact) return Outcome::kSkip;
    std::uint64_t bound = 3 * (ramsey_upper(t).upper - 1) * (std::uint64_t{1} << (rw.width() + 1)) - 1;
    if ((std::uint64_t)twg > bound)
      return c.fail("tw=" + std::to_string(twg) + " exceeds " + std::to_string(bound));
    return Outcome::kPass;
  }
  return Outcome::kSkip;
}

// --- strongly-2-bipartite: S_G is a stable partite set; recognizer agrees ---

Outcome suite_strongly_2bipartite(Ctx& c) {
  Rng rng(c.seed);
  Graph g = strongly_2bipartite_graph(4 + (int)rng.below(2), rng.next());
  auto bp = strongly_2bipartite_partition(g);
  if (!bp) return c.fail("generated graph not recognized as strongly 2-bipartite");
  VSet s_g = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3) s_g |= bit(v);
  if (s_g != bp->second) return c.fail("S_G is not the degree->=3 side of the partition");
  if (!is_stable(g, s_g)) return c.fail("S_G is not stable");
  auto label = recognize_basic_unique_chord(g, c.budget);
  if (label.kind != BasicClass::kStronglyTwoBipartite)
    return c.fail("recognizer labels the graph " + to_string(label.kind));
  return Outcome::kPass;
}

struct SuiteEntry {
  const char* name;
  Outcome (*run)(Ctx&);
};

constexpr SuiteEntry kSuites[] = {
    {"subdivision-tw", suite_subdivision_tw},
    {"clique-cutset-tw", suite_clique_cutset_tw},
    {"two-cutset-closure", suite_closure},
    {"two-cutset-strong-closure", suite_strong_closure},
    {"prime-base", suite_prime_base},
    {"one-join-rw", suite_one_join_rw},
    {"line-graph-bound", suite_line_graph_bound},
    {"isk4-2-cutset-safe", suite_isk4_safe},
    {"unique-chord-2-cutset-safe", suite_unique_chord_safe},
    {"one-join-after-1-cutset", suite_one_join_after_one_cutset},
    {"one-join-after-2-cutset", suite_one_join_after_two_cutset},
    {"ramsey-tw-rw", suite_ramsey_tw_rw},
    {"strongly-2-bipartite", suite_strongly_2bipartite},
};

}  // namespace

std::vector<std::string> lemma_names() {
  std::vector<std::string> out;
  for (const auto& e : kSuites) out.push_back(e.name);
  return out;
}

LemmaReport verify_lemma(const std::string& name, int trials, std::uint64_t seed, Budget budget) {
  const SuiteEntry* entry = nullptr;
  for (const auto& e : kSuites)
    if (name == e.name) entry = &e;
  if (!entry) throw InputError("unknown lemma name: " + name);

  LemmaReport rep;
  rep.name = name;
  rep.trials = trials;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < trials; ++i) {
    Ctx ctx{Rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1))).next(), budget, {}};
    Outcome o;
    try {
      o = entry->run(ctx);
    } catch (const std::exception& e) {
      o = Outcome::kFail;
      ctx.detail = std::string("exception: ") + e.what();
    }
#pragma omp critical
    {
      if (o == Outcome::kPass) ++rep.passes;
      if (o == Outcome::kSkip) ++rep.skipped;
      if (o == Outcome::kFail) {
        ++rep.failures;
        rep.failing.push_back({ctx.seed, ctx.detail});
      }
    }
  }
  std::sort(rep.failing.begin(), rep.failing.end(),
            [](const TrialFailure& a, const TrialFailure& b) { return a.seed < b.seed; });
  return rep;
}

}  // namespace gdt
