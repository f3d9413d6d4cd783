#include "gdt/detect.hpp"

#include <algorithm>

#include "gdt/recognize.hpp"

namespace gdt {

namespace {

struct SubdivisionSearch {
  const Graph& g;
  const Graph& pat;
  Budget& budget;
  bool full_cover;
  std::vector<std::pair<int, int>> pat_edges;
  std::vector<int> branch;  // image per pattern vertex, -1 unassigned
  VSet branch_set = 0;
  VSet used = 0;  // all witness vertices so far
  std::vector<std::vector<int>> paths;
  bool out_of_budget = false;

  SubdivisionSearch(const Graph& gg, const Graph& pp, Budget& bb, bool fc)
      : g(gg), pat(pp), budget(bb), full_cover(fc), pat_edges(pp.edges()),
        branch(pp.vertex_count(), -1) {}

  bool assign_branches(int i) {
    if (out_of_budget) return false;
    if (i == pat.vertex_count()) {
      used = branch_set;
      paths.assign(pat_edges.size(), {});
      return realize_edge(0);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!budget.tick()) {
        out_of_budget = true;
        return false;
      }
      if (contains(branch_set, v) || g.degree(v) < pat.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (!pat.has_edge(i, j) && g.has_edge(v, branch[j])) ok = false;
      if (!ok) continue;
      branch[i] = v;
      branch_set |= bit(v);
      if (assign_branches(i + 1)) return true;
      branch_set &= ~bit(v);
      branch[i] = -1;
    }
    return false;
  }

  bool realize_edge(size_t e) {
    if (out_of_budget) return false;
    if (e == pat_edges.size()) return !full_cover || used == g.vertices();
    int s = branch[pat_edges[e].first];
    int t = branch[pat_edges[e].second];
    if (g.has_edge(s, t)) {
      // A host edge between the two branch images must be the path itself.
      paths[e] = {s, t};
      return realize_edge(e + 1);
    }
    paths[e] = {s};
    return grow_path(e, s, t);
  }

  bool grow_path(size_t e, int prev, int target) {
    if (out_of_budget) return false;
    for (int x : VertexRange{g.neighbors(prev) & ~used}) {
      if (!budget.tick()) {
        out_of_budget = true;
        return false;
      }
      VSet others = g.neighbors_in(x, used) & ~bit(prev);
      if (others == 0) {
        // Interior vertex; cannot close here since x is not adjacent to
        // the target (target is in `used`).
        paths[e].push_back(x);
        used |= bit(x);
        if (grow_path(e, x, target)) return true;
        used &= ~bit(x);
        paths[e].pop_back();
      } else if (others == bit(target)) {
        paths[e].push_back(x);
        paths[e].push_back(target);
        used |= bit(x);
        if (realize_edge(e + 1)) return true;
        used &= ~bit(x);
        paths[e].pop_back();
        paths[e].pop_back();
      }
      // Any other adjacency into the witness is a chord; prune.
    }
    return false;
  }
};

// Structural re-verification of a subdivision witness.
bool verify_subdivision(const Graph& g, const Graph& pat, const SubdivisionWitness& w) {
  VSet all = w.vertices;
  // Collect the claimed edges.
  std::vector<std::pair<int, int>> claimed;
  for (const auto& p : w.paths)
    for (size_t i = 0; i + 1 < p.size(); ++i)
      claimed.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
  std::sort(claimed.begin(), claimed.end());
  if (std::adjacent_find(claimed.begin(), claimed.end()) != claimed.end()) return false;
  std::vector<std::pair<int, int>> actual;
  for (int u : VertexRange{all})
    for (int v : VertexRange{g.neighbors_in(u, all)})
      if (u < v) actual.emplace_back(u, v);
  std::sort(actual.begin(), actual.end());
  if (claimed != actual) return false;
  for (size_t e = 0; e < w.paths.size(); ++e) {
    const auto& p = w.paths[e];
    auto [i, j] = pat.edges()[e];
    if (p.front() != w.branch[i] || p.back() != w.branch[j]) return false;
  }
  return true;
}

}  // namespace

Detection<SubdivisionWitness> find_induced_subdivision(const Graph& g, const Graph& pattern,
                                                       Budget budget, bool require_full_cover) {
  Detection<SubdivisionWitness> r;
  if (pattern.vertex_count() == 0 || !is_connected(pattern))
    throw InputError("find_induced_subdivision: pattern must be connected and non-empty");
  if (pattern.vertex_count() > g.vertex_count()) return r;
  SubdivisionSearch s(g, pattern, budget, require_full_cover);
  if (s.assign_branches(0)) {
    SubdivisionWitness w;
    w.branch = s.branch;
    w.paths = s.paths;
    w.vertices = s.used;
    if (!verify_subdivision(g, pattern, w))
      throw std::logic_error("subdivision witness failed self-check");
    r.witness = std::move(w);
  }
  r.exhaustive = !s.out_of_budget;
  return r;
}

Detection<SubdivisionWitness> detect_isk4(const Graph& g, Budget budget) {
  return find_induced_subdivision(g, complete_graph(4), budget);
}

namespace {

struct HoleSearch {
  const Graph& g;
  Budget& budget;
  const std::function<bool(const std::vector<int>&)>& cb;
  int min_len;
  std::vector<int> path;
  VSet mask = 0;
  bool stopped = false;       // callback asked to stop
  bool out_of_budget = false;

  bool extend() {
    if (stopped || out_of_budget) return false;
    int s = path.front(), last = path.back();
    for (int v : VertexRange{g.neighbors(last) & ~mask}) {
      if (v <= s) continue;
      if (!budget.tick()) {
        out_of_budget = true;
        return false;
      }
      VSet others = g.neighbors_in(v, mask) & ~bit(last);
      if (others == 0) {
        path.push_back(v);
        mask |= bit(v);
        extend();
        mask &= ~bit(v);
        path.pop_back();
        if (stopped || out_of_budget) return false;
      } else if (others == bit(s) && (int)path.size() + 1 >= min_len) {
        if (path.size() < 2 || path[1] < v) {  // one orientation only
          path.push_back(v);
          if (!cb(path)) stopped = true;
          path.pop_back();
          if (stopped) return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

bool for_each_hole(const Graph& g, int min_len, Budget& budget,
                   const std::function<bool(const std::vector<int>&)>& cb) {
  for (int s = 0; s < g.vertex_count(); ++s) {
    HoleSearch hs{g, budget, cb, min_len, {s}, bit(s)};
    hs.extend();
    if (hs.out_of_budget) return false;
    if (hs.stopped) return true;
  }
  return true;
}

Detection<WheelWitness> detect_wheel(const Graph& g, Budget budget, int min_hole_length) {
  Detection<WheelWitness> r;
  bool done = for_each_hole(g, min_hole_length, budget, [&](const std::vector<int>& hole) {
    VSet hmask = from_vertex_list(hole);
    for (int v : VertexRange{g.vertices() & ~hmask}) {
      if (popcount(g.neighbors_in(v, hmask)) >= 3) {
        WheelWitness w;
        w.hole = hole;
        w.hub = v;
        r.witness = w;
        return false;
      }
    }
    return true;
  });
  r.exhaustive = done || r.found();
  return r;
}

namespace {

struct ChordCycleSearch {
  const Graph& g;
  Budget& budget;
  std::vector<int> path;
  VSet mask;
  std::optional<UniqueChordWitness> hit;
  bool out_of_budget = false;

  void extend(int chords) {
    if (hit || out_of_budget) return;
    int s = path.front(), last = path.back();
    for (int v : VertexRange{g.neighbors(last) & ~mask}) {
      if (v <= s) continue;
      if (!budget.tick()) {
        out_of_budget = true;
        return;
      }
      VSet back = g.neighbors_in(v, mask) & ~bit(last);
      bool closes = contains(back, s) && path.size() >= 3;
      if (closes && (path.size() < 2 || path[1] < v)) {
        int total = chords + popcount(back & ~bit(s));
        if (total == 1) {
          // Identify the chord among the cycle vertices.
          std::vector<int> cyc = path;
          cyc.push_back(v);
          UniqueChordWitness w;
          w.cycle = cyc;
          int k = (int)cyc.size();
          for (int i = 0; i < k && w.chord.first < 0; ++i)
            for (int j = i + 1; j < k; ++j) {
              bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
              if (!consecutive && g.has_edge(cyc[i], cyc[j])) {
                w.chord = {cyc[i], cyc[j]};
                break;
              }
            }
          hit = w;
          return;
        }
      }
      int new_chords = chords + popcount(back & ~bit(s)) + (contains(back, s) ? 1 : 0);
      // When v later becomes a middle vertex, its edge to s is a chord.
      if (new_chords <= 1) {
        path.push_back(v);
        mask |= bit(v);
        extend(new_chords);
        mask &= ~bit(v);
        path.pop_back();
        if (hit || out_of_budget) return;
      }
    }
  }
};

}  // namespace

Detection<UniqueChordWitness> detect_unique_chord_cycle(const Graph& g, Budget budget) {
  Detection<UniqueChordWitness> r;
  for (int s = 0; s < g.vertex_count(); ++s) {
    ChordCycleSearch cs{g, budget, {s}, bit(s), std::nullopt};
    cs.extend(0);
    if (cs.hit) {
      r.witness = cs.hit;
      return r;
    }
    if (cs.out_of_budget) {
      r.exhaustive = false;
      return r;
    }
  }
  return r;
}

namespace {

bool grow_clique(const Graph& g, VSet current, VSet candidates, int need, VSet* out) {
  if (need == 0) {
    *out = current;
    return true;
  }
  while (candidates) {
    int v = lowest_vertex(candidates);
    candidates &= ~bit(v);
    if (popcount(candidates) + 1 < need) return false;
    if (grow_clique(g, current | bit(v), candidates & g.neighbors(v), need - 1, out))
      return true;
  }
  return false;
}

bool grow_stable(const Graph& g, VSet current, VSet candidates, int need, VSet* out,
                 const std::function<bool(VSet)>& accept) {
  if (need == 0) return accept(current) ? (*out = current, true) : false;
  while (candidates) {
    int v = lowest_vertex(candidates);
    candidates &= ~bit(v);
    if (popcount(candidates) + 1 < need) return false;
    if (grow_stable(g, current | bit(v), candidates & ~g.neighbors(v), need - 1, out, accept))
      return true;
  }
  return false;
}

}  // namespace

std::optional<VSet> detect_clique(const Graph& g, int t) {
  if (t < 1) throw InputError("detect_clique: t must be positive");
  VSet out;
  if (grow_clique(g, 0, g.vertices(), t, &out)) return out;
  return std::nullopt;
}

std::optional<std::pair<VSet, VSet>> detect_biclique(const Graph& g, int t) {
  if (t < 1) throw InputError("detect_biclique: t must be positive");
  std::optional<std::pair<VSet, VSet>> result;
  VSet a_out;
  auto try_b = [&](VSet a) {
    VSet common = g.vertices();
    for (int v : VertexRange{a}) common &= g.neighbors(v);
    VSet b_out;
    if (grow_stable(g, 0, common, t, &b_out, [](VSet) { return true; })) {
      result = {a, b_out};
      return true;
    }
    return false;
  };
  grow_stable(g, 0, g.vertices(), t, &a_out, try_b);
  return result;
}

CleanlinessReport is_t_clean(const Graph& g, int t, Budget budget) {
  if (t < 2) throw InputError("is_t_clean: t must be at least 2");
  CleanlinessReport rep;
  if (auto k = detect_clique(g, t)) {
    rep.clean = Tri::kNo;
    rep.violation = "clique";
    rep.witness = *k;
    return rep;
  }
  if (auto b = detect_biclique(g, t)) {
    rep.clean = Tri::kNo;
    rep.violation = "biclique";
    rep.witness = b->first | b->second;
    return rep;
  }
  // wall(t) may not fit in 62 vertices at all; then no subdivision of it
  // (nor its line graph, which is at least as large) fits in g either.
  std::optional<Graph> maybe_wall;
  try {
    maybe_wall = wall(t);
  } catch (const InputError&) {
    rep.clean = Tri::kYes;
    return rep;
  }
  const Graph& w = *maybe_wall;
  bool all_exhaustive = true;
  if (w.vertex_count() <= g.vertex_count()) {
    auto d = find_induced_subdivision(g, w, budget);
    if (d.found()) {
      rep.clean = Tri::kNo;
      rep.violation = "wall";
      rep.witness = d.witness->vertices;
      return rep;
    }
    all_exhaustive = all_exhaustive && d.exhaustive;
  }
  // Line graph of a subdivision of wall(t): such a graph has at least
  // |E(wall(t))| vertices; scan induced subgraphs for one.
  int min_lg = w.edge_count();
  if (min_lg <= g.vertex_count()) {
    VSet all = g.vertices();
    for (VSet s = all;; s = (s - 1) & all) {
      if (!budget.tick((VSet)1)) {
        all_exhaustive = false;
        break;
      }
      if (popcount(s) >= min_lg) {
        Graph h = induced_subgraph(g, s);
        if (auto root = line_graph_root(h, budget)) {
          auto d = find_induced_subdivision(*root, w, budget, /*require_full_cover=*/true);
          all_exhaustive = all_exhaustive && d.exhaustive;
          if (d.found()) {
            rep.clean = Tri::kNo;
            rep.violation = "line-of-wall";
            rep.witness = s;
            return rep;
          }
        }
      }
      if (s == 0) break;
    }
  }
  rep.clean = all_exhaustive ? Tri::kYes : Tri::kUnknown;
  return rep;
}

}  // namespace gdt
