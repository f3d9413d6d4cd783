#include "gdt/cutsets.hpp"

#include <algorithm>
#include <set>

namespace gdt {

std::string to_string(CutKind k) {
  switch (k) {
    case CutKind::kOneCutset: return "one-cutset";
    case CutKind::kCliqueCutset: return "clique-cutset";
    case CutKind::kTwoCutset: return "two-cutset";
    case CutKind::kProperTwoCutset: return "proper-two-cutset";
    case CutKind::kOneJoin: return "one-join";
    case CutKind::kProperOneJoin: return "proper-one-join";
  }
  return "?";
}

namespace {

bool removal_disconnects(const Graph& g, VSet witness) {
  VSet rest = g.vertices() & ~witness;
  if (rest == 0) return false;
  return components_within(g, rest).size() >= 2;
}

bool one_join_valid(const Graph& g, const CutsetFinding& f, bool proper) {
  VSet all = g.vertices();
  if ((f.x | f.y) != all || (f.x & f.y) != 0) return false;
  if (popcount(f.x) < 2 || popcount(f.y) < 2) return false;
  if (!f.a || !f.b || (f.a & ~f.x) || (f.b & ~f.y)) return false;
  for (int v : VertexRange{f.x}) {
    VSet cross = g.neighbors_in(v, f.y);
    if (contains(f.a, v) ? cross != f.b : cross != 0) return false;
  }
  if (proper) {
    if (popcount(f.a) < 2 || popcount(f.b) < 2) return false;
    if (!is_stable(g, f.a) || !is_stable(g, f.b)) return false;
  }
  return true;
}

}  // namespace

bool verify_finding(const Graph& g, const CutsetFinding& f) {
  switch (f.kind) {
    case CutKind::kOneCutset:
      return popcount(f.witness) == 1 && removal_disconnects(g, f.witness);
    case CutKind::kCliqueCutset:
      return is_clique(g, f.witness) && removal_disconnects(g, f.witness);
    case CutKind::kTwoCutset:
      return popcount(f.witness) == 2 && removal_disconnects(g, f.witness);
    case CutKind::kProperTwoCutset: {
      if (popcount(f.witness) != 2 || !removal_disconnects(g, f.witness)) return false;
      VSet rest = g.vertices() & ~f.witness;
      if ((f.side_x | f.side_y) != rest || (f.side_x & f.side_y)) return false;
      if (popcount(f.side_x) < 2 || popcount(f.side_y) < 2) return false;
      return is_anticomplete_between(g, f.side_x, f.side_y);
    }
    case CutKind::kOneJoin:
      return one_join_valid(g, f, false);
    case CutKind::kProperOneJoin:
      return one_join_valid(g, f, true);
  }
  return false;
}

std::vector<int> find_one_cutsets(const Graph& g) {
  if (!is_connected(g)) throw InputError("find_one_cutsets: graph must be connected");
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (components_within(g, g.vertices() & ~bit(v)).size() >= 2) out.push_back(v);
  return out;
}

std::vector<VSet> minimal_separators(const Graph& g, Budget budget) {
  std::set<VSet> seen;
  std::vector<VSet> queue;
  auto offer = [&](VSet s) {
    if (s && seen.insert(s).second) queue.push_back(s);
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    VSet rest = g.vertices() & ~(g.neighbors(v) | bit(v));
    for (VSet comp : components_within(g, rest)) {
      VSet nb = 0;
      for (int w : VertexRange{comp}) nb |= g.neighbors(w);
      offer(nb & ~comp);
    }
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    if (!budget.tick()) break;
    VSet s = queue[i];
    for (int x : VertexRange{s}) {
      VSet rest = g.vertices() & ~(s | g.neighbors(x) | bit(x));
      for (VSet comp : components_within(g, rest)) {
        VSet nb = 0;
        for (int w : VertexRange{comp}) nb |= g.neighbors(w);
        offer(nb & ~comp);
      }
    }
  }
  std::vector<VSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](VSet a, VSet b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::optional<CutsetFinding> find_clique_cutset(const Graph& g, Budget budget) {
  if (!is_connected(g)) throw InputError("find_clique_cutset: graph must be connected");
  for (VSet s : minimal_separators(g, budget)) {
    if (!is_clique(g, s)) continue;
    CutsetFinding f;
    f.kind = CutKind::kCliqueCutset;
    f.witness = s;
    f.side_components = components_within(g, g.vertices() & ~s);
    if (!verify_finding(g, f)) throw std::logic_error("clique cutset failed self-check");
    return f;
  }
  return std::nullopt;
}

std::vector<CutsetFinding> find_two_cutsets(const Graph& g) {
  if (!is_connected(g)) throw InputError("find_two_cutsets: graph must be connected");
  std::vector<CutsetFinding> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VSet pair = bit(u) | bit(v);
      auto comps = components_within(g, g.vertices() & ~pair);
      if (comps.size() < 2) continue;
      CutsetFinding f;
      f.kind = CutKind::kTwoCutset;
      f.witness = pair;
      f.side_components = comps;
      out.push_back(f);
    }
  return out;
}

std::vector<CutsetFinding> find_proper_two_cutsets(const Graph& g) {
  std::vector<CutsetFinding> out;
  for (CutsetFinding f : find_two_cutsets(g)) {
    const auto& comps = f.side_components;
    int m = (int)comps.size();
    // Group components into two sides of size >= 2 each; first grouping
    // in mask order with component 0 on side X.
    bool found = false;
    for (unsigned mask = 1; mask < (1u << m) - 1 && !found; mask += 2) {
      VSet sx = 0, sy = 0;
      for (int i = 0; i < m; ++i) ((mask >> i) & 1 ? sx : sy) |= comps[i];
      if (popcount(sx) >= 2 && popcount(sy) >= 2) {
        f.kind = CutKind::kProperTwoCutset;
        f.side_x = sx;
        f.side_y = sy;
        found = true;
      }
    }
    if (found) {
      if (!verify_finding(g, f)) throw std::logic_error("proper 2-cutset failed self-check");
      out.push_back(f);
    }
  }
  return out;
}

namespace {

Closure make_closure(const Graph& g, int u, int v, VSet component, bool strong) {
  auto comps = components_within(g, g.vertices() & ~(bit(u) | bit(v)));
  if (comps.size() < 2) throw InputError("closure: pair is not a 2-cutset");
  if (std::find(comps.begin(), comps.end(), component) == comps.end())
    throw InputError("closure: set is not a component of g minus the pair");
  Closure c;
  Graph h = induced_subgraph(g, component | bit(u) | bit(v), &c.old_labels);
  c.u = (int)(std::find(c.old_labels.begin(), c.old_labels.end(), u) - c.old_labels.begin());
  c.v = (int)(std::find(c.old_labels.begin(), c.old_labels.end(), v) - c.old_labels.begin());
  if (!h.has_edge(c.u, c.v)) h.add_edge(c.u, c.v);
  if (strong) {
    h = subdivide_edge(h, c.u, c.v);
    c.marker = h.vertex_count() - 1;
    c.old_labels.push_back(-1);
  }
  c.graph = std::move(h);
  return c;
}

}  // namespace

Closure closure(const Graph& g, int u, int v, VSet component) {
  return make_closure(g, u, v, component, false);
}

Closure strong_closure(const Graph& g, int u, int v, VSet component) {
  return make_closure(g, u, v, component, true);
}

namespace {

OneJoinSearch scan_one_joins(const Graph& g, bool proper, Budget budget, int avoid = -1) {
  OneJoinSearch res;
  int n = g.vertex_count();
  if (n < 4) return res;
  VSet all = g.vertices();
  VSet limit = VSet{1} << (n - 1);
  for (VSet half = 0; half < limit; ++half) {
    if (!budget.tick()) {
      res.exhaustive = false;
      return res;
    }
    VSet x = (half << 1) | 1;  // vertex 0 stays on the X side
    VSet y = all & ~x;
    if (popcount(x) < 2 || popcount(y) < 2) continue;
    VSet a = 0, b = 0;
    for (int v : VertexRange{x})
      if (g.neighbors_in(v, y)) a |= bit(v);
    for (int w : VertexRange{y})
      if (g.neighbors_in(w, x)) b |= bit(w);
    if (!a || !b) continue;
    bool ok = true;
    for (int v : VertexRange{a})
      if (g.neighbors_in(v, y) != b) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (proper &&
        (popcount(a) < 2 || popcount(b) < 2 || !is_stable(g, a) || !is_stable(g, b)))
      continue;
    if (avoid >= 0 && contains(a | b, avoid)) continue;
    CutsetFinding f;
    f.kind = proper ? CutKind::kProperOneJoin : CutKind::kOneJoin;
    f.x = x;
    f.y = y;
    f.a = a;
    f.b = b;
    if (!verify_finding(g, f)) throw std::logic_error("1-join failed self-check");
    res.finding = f;
    return res;
  }
  return res;
}

}  // namespace

OneJoinSearch find_proper_one_join(const Graph& g, Budget budget) {
  return scan_one_joins(g, true, budget);
}

OneJoinSearch find_one_join(const Graph& g, Budget budget) {
  return scan_one_joins(g, false, budget);
}

OneJoinSearch find_proper_one_join_avoiding(const Graph& g, int marker, Budget budget) {
  return scan_one_joins(g, true, budget, marker);
}

std::pair<Closure, Closure> one_join_blocks(const Graph& g, const CutsetFinding& join) {
  if (join.kind != CutKind::kOneJoin && join.kind != CutKind::kProperOneJoin)
    throw InputError("one_join_blocks: finding is not a 1-join");
  if (!verify_finding(g, join)) throw InputError("one_join_blocks: invalid 1-join");
  int a = lowest_vertex(join.a), b = lowest_vertex(join.b);
  Closure bx, by;
  bx.graph = induced_subgraph(g, join.x | bit(b), &bx.old_labels);
  by.graph = induced_subgraph(g, join.y | bit(a), &by.old_labels);
  bx.marker = (int)(std::find(bx.old_labels.begin(), bx.old_labels.end(), b) -
                    bx.old_labels.begin());
  by.marker = (int)(std::find(by.old_labels.begin(), by.old_labels.end(), a) -
                    by.old_labels.begin());
  return {bx, by};
}

}  // namespace gdt
