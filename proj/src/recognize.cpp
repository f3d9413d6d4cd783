#include "gdt/recognize.hpp"

#include <algorithm>
#include <array>

#include "gdt/treewidth.hpp"

namespace gdt {

std::string to_string(BasicClass c) {
  switch (c) {
    case BasicClass::kSeriesParallel: return "series-parallel";
    case BasicClass::kLineOfChordlessSubcubic: return "line-of-chordless-subcubic";
    case BasicClass::kCompleteBipartite: return "complete-bipartite";
    case BasicClass::kLongRichSquare: return "long-rich-square";
    case BasicClass::kStronglyTwoBipartite: return "strongly-2-bipartite";
    case BasicClass::kHoleAtLeast7: return "hole-ge-7";
    case BasicClass::kClique: return "clique";
    case BasicClass::kPetersenEmbedded: return "petersen-embedded";
    case BasicClass::kHeawoodEmbedded: return "heawood-embedded";
    case BasicClass::kNone: return "none";
  }
  return "?";
}

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kAllGraphs: return "all-graphs";
    case GraphClass::kIsk4WheelFree: return "isk4-wheel-free";
    case GraphClass::kUniqueChordFree: return "unique-chord-free";
  }
  return "?";
}

namespace {

// Krausz-style search: partition the edges into cliques with every vertex
// in at most two cliques.  Visits partitions in a fixed order; the visitor
// returns true to stop.
struct KrauszSearch {
  const Graph& g;
  Budget& budget;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> covered_by;       // clique index per edge, -1 uncovered
  std::vector<VSet> cliques;
  std::vector<int> clique_count;     // cliques per vertex
  const std::function<bool(const std::vector<VSet>&)>& visit;
  bool stopped = false;
  bool out_of_budget = false;

  KrauszSearch(const Graph& gg, Budget& bb,
               const std::function<bool(const std::vector<VSet>&)>& vv)
      : g(gg), budget(bb), edges(gg.edges()), covered_by(edges.size(), -1),
        clique_count(gg.vertex_count(), 0), visit(vv) {}

  int edge_index(int u, int v) const {
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == std::make_pair(std::min(u, v), std::max(u, v))) return (int)i;
    return -1;
  }

  void cover_edges_of(VSet k, int idx, std::vector<int>& touched) {
    for (int u : VertexRange{k})
      for (int v : VertexRange{k & ~((bit(u) << 1) - 1)}) {
        int e = edge_index(u, v);
        if (covered_by[e] == -1) {
          covered_by[e] = idx;
          touched.push_back(e);
        }
      }
  }

  bool can_extend(int ci, int w) {
    VSet k = cliques[ci];
    if ((g.neighbors(w) & k) != k) return false;  // must stay a clique
    if (!contains(k, w) && clique_count[w] >= 2) return false;
    // Edges from w into k must not be covered by another clique already.
    for (int u : VertexRange{k})
      if (covered_by[edge_index(u, w)] != -1) return false;
    return true;
  }

  void search() {
    if (stopped || out_of_budget) return;
    if (!budget.tick()) {
      out_of_budget = true;
      return;
    }
    size_t e = 0;
    while (e < edges.size() && covered_by[e] != -1) ++e;
    if (e == edges.size()) {
      if (visit(cliques)) stopped = true;
      return;
    }
    auto [u, v] = edges[e];
    // Extend an existing clique containing u or v by the other endpoint.
    for (size_t ci = 0; ci < cliques.size() && !stopped && !out_of_budget; ++ci) {
      for (auto [in, out] : {std::pair{u, v}, std::pair{v, u}}) {
        if (!contains(cliques[ci], in) || contains(cliques[ci], out)) continue;
        if (!can_extend((int)ci, out)) continue;
        std::vector<int> touched;
        VSet saved = cliques[ci];
        cliques[ci] |= bit(out);
        clique_count[out]++;
        cover_edges_of(cliques[ci], (int)ci, touched);
        search();
        for (int t : touched) covered_by[t] = -1;
        clique_count[out]--;
        cliques[ci] = saved;
        if (stopped || out_of_budget) return;
      }
    }
    // Or open a new clique on this edge.
    if (clique_count[u] < 2 && clique_count[v] < 2) {
      cliques.push_back(bit(u) | bit(v));
      clique_count[u]++;
      clique_count[v]++;
      covered_by[e] = (int)cliques.size() - 1;
      search();
      covered_by[e] = -1;
      clique_count[u]--;
      clique_count[v]--;
      cliques.pop_back();
    }
  }
};

Graph root_from_cliques(const Graph& g, const std::vector<VSet>& cliques) {
  int n = g.vertex_count();
  std::vector<std::array<int, 2>> of(n, {-1, -1});
  for (size_t ci = 0; ci < cliques.size(); ++ci)
    for (int v : VertexRange{cliques[ci]}) of[v][of[v][0] == -1 ? 0 : 1] = (int)ci;
  int next = (int)cliques.size();
  for (int v = 0; v < n; ++v) {
    if (of[v][0] == -1) of[v][0] = next++;  // isolated g-vertex
    if (of[v][1] == -1) of[v][1] = next++;  // pendant slot
  }
  if (next > Graph::kMaxVertices) throw InputError("line graph root too large");
  Graph root(next);
  for (int v = 0; v < n; ++v) root.add_edge(of[v][0], of[v][1]);
  return root;
}

void for_each_root(const Graph& g, Budget& budget,
                   const std::function<bool(const Graph&)>& visit, bool* exhausted) {
  std::function<bool(const std::vector<VSet>&)> on_partition =
      [&](const std::vector<VSet>& cliques) { return visit(root_from_cliques(g, cliques)); };
  KrauszSearch ks(g, budget, on_partition);
  ks.search();
  if (exhausted) *exhausted = ks.out_of_budget;
}

}  // namespace

std::optional<Graph> line_graph_root(const Graph& g, Budget budget) {
  std::optional<Graph> out;
  for_each_root(g, budget, [&](const Graph& r) { out = r; return true; }, nullptr);
  return out;
}

bool is_chordless_graph(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    Graph h(g.vertex_count());
    for (auto [a, b] : g.edges())
      if (!(a == u && b == v)) h.add_edge(a, b);
    for (VSet blk : biconnected_blocks(h))
      if (contains(blk, u) && contains(blk, v) && popcount(blk) >= 3) return false;
  }
  return true;
}

std::optional<Graph> recognize_line_of_chordless_subcubic(const Graph& g, Budget budget) {
  std::optional<Graph> out;
  for_each_root(g, budget, [&](const Graph& r) {
    if (r.max_degree() <= 3 && is_chordless_graph(r)) {
      out = r;
      return true;
    }
    return false;
  }, nullptr);
  return out;
}

bool is_series_parallel(const Graph& g) {
  for (VSet blk : biconnected_blocks(g)) {
    if (popcount(blk) < 3) continue;
    if (treewidth_exact(induced_subgraph(g, blk)).width() > 2) return false;
  }
  return true;
}

bool is_complete_bipartite_graph(const Graph& g, VSet* x, VSet* y) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  VSet sx = 0, sy = 0;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      (color[v] == 0 ? sx : sy) |= bit(v);
      for (int w : VertexRange{g.neighbors(v)}) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (sx && sy && !is_complete_between(g, sx, sy)) return false;
  if (x) *x = sx;
  if (y) *y = sy;
  return true;
}

namespace {

// Is G[c] a path with at least 2 vertices?  Fills the two ends.
bool induced_path(const Graph& g, VSet c, int* end1, int* end2) {
  if (popcount(c) < 2 || !is_connected_within(g, c)) return false;
  int ends = 0, e1 = -1, e2 = -1;
  for (int v : VertexRange{c}) {
    int d = popcount(g.neighbors_in(v, c));
    if (d > 2) return false;
    if (d <= 1) {
      if (ends == 0) e1 = v; else e2 = v;
      ++ends;
    }
  }
  if (ends != 2) return false;  // 2-regular would be a cycle
  *end1 = e1;
  *end2 = e2;
  return true;
}

}  // namespace

std::optional<VSet> long_rich_square_center(const Graph& g) {
  int n = g.vertex_count();
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 : VertexRange{g.neighbors(u1) & ~((bit(u1) << 1) - 1)})
      for (int u3 : VertexRange{g.neighbors(u2) & ~bit(u1) & ~g.neighbors(u1)})
        for (int u4 : VertexRange{g.neighbors(u3) & g.neighbors(u1) & ~g.neighbors(u2) & ~bit(u2)}) {
          VSet s = bit(u1) | bit(u2) | bit(u3) | bit(u4);
          VSet e12 = bit(u1) | bit(u2), e34 = bit(u3) | bit(u4);
          VSet e23 = bit(u2) | bit(u3), e14 = bit(u1) | bit(u4);
          bool ok = true;
          for (VSet comp : components_within(g, g.vertices() & ~s)) {
            int p1, pk;
            if (!induced_path(g, comp, &p1, &pk)) { ok = false; break; }
            for (int v : VertexRange{comp & ~bit(p1) & ~bit(pk)})
              if (g.neighbors_in(v, s)) { ok = false; break; }
            if (!ok) break;
            VSet n1 = g.neighbors_in(p1, s), nk = g.neighbors_in(pk, s);
            bool pinned = (n1 == e12 && nk == e34) || (n1 == e34 && nk == e12) ||
                          (n1 == e23 && nk == e14) || (n1 == e14 && nk == e23);
            if (!pinned) { ok = false; break; }
          }
          if (ok) return s;
        }
  return std::nullopt;
}

std::optional<std::pair<VSet, VSet>> strongly_2bipartite_partition(const Graph& g) {
  VSet x = 0, y = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d == 2)
      x |= bit(v);
    else if (d >= 3)
      y |= bit(v);
    else
      return std::nullopt;
  }
  if (!is_stable(g, x) || !is_stable(g, y)) return std::nullopt;
  // C4-free: no two vertices with two common neighbors.
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (popcount(g.neighbors(u) & g.neighbors(v)) >= 2) return std::nullopt;
  return std::make_pair(x, y);
}

namespace {

bool embed(const Graph& g, const Graph& host, std::vector<int>& map, VSet used, int next) {
  if (next == g.vertex_count()) return true;
  for (int w = 0; w < host.vertex_count(); ++w) {
    if (contains(used, w)) continue;
    bool ok = true;
    for (int u = 0; u < next && ok; ++u)
      if (g.has_edge(u, next) != host.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[next] = w;
    if (embed(g, host, map, used | bit(w), next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> embeds_in_fixed_host(const Graph& g, FixedHost host) {
  Graph h = host == FixedHost::kPetersen ? petersen() : heawood();
  if (g.vertex_count() > h.vertex_count()) return std::nullopt;
  std::vector<int> map(g.vertex_count(), -1);
  if (embed(g, h, map, 0, 0)) return map;
  return std::nullopt;
}

ClassLabel recognize_basic_isk4(const Graph& g, Budget budget) {
  if (!is_connected(g)) throw InputError("recognize_basic_isk4: graph must be connected");
  ClassLabel label;
  if (is_series_parallel(g)) {
    label.kind = BasicClass::kSeriesParallel;
    return label;
  }
  if (auto root = recognize_line_of_chordless_subcubic(g, budget)) {
    label.kind = BasicClass::kLineOfChordlessSubcubic;
    label.root = *root;
    return label;
  }
  if (is_complete_bipartite_graph(g, &label.side_x, &label.side_y)) {
    label.kind = BasicClass::kCompleteBipartite;
    return label;
  }
  if (auto s = long_rich_square_center(g)) {
    label.kind = BasicClass::kLongRichSquare;
    label.central_square = *s;
    return label;
  }
  label.kind = BasicClass::kNone;
  return label;
}

ClassLabel recognize_basic_unique_chord(const Graph& g, Budget budget) {
  (void)budget;
  if (!is_connected(g)) throw InputError("recognize_basic_unique_chord: graph must be connected");
  ClassLabel label;
  if (auto bp = strongly_2bipartite_partition(g)) {
    label.kind = BasicClass::kStronglyTwoBipartite;
    label.side_x = bp->first;
    label.side_y = bp->second;
    return label;
  }
  if (g.vertex_count() >= 7) {
    bool cyc = true;
    for (int v = 0; v < g.vertex_count() && cyc; ++v) cyc = g.degree(v) == 2;
    if (cyc && is_connected(g)) {
      label.kind = BasicClass::kHoleAtLeast7;
      return label;
    }
  }
  if (is_clique(g, g.vertices())) {
    label.kind = BasicClass::kClique;
    return label;
  }
  if (auto m = embeds_in_fixed_host(g, FixedHost::kPetersen)) {
    label.kind = BasicClass::kPetersenEmbedded;
    label.embedding = *m;
    return label;
  }
  if (auto m = embeds_in_fixed_host(g, FixedHost::kHeawood)) {
    label.kind = BasicClass::kHeawoodEmbedded;
    label.embedding = *m;
    return label;
  }
  label.kind = BasicClass::kNone;
  return label;
}

Tri in_class(const Graph& g, GraphClass c, Budget budget) {
  switch (c) {
    case GraphClass::kAllGraphs:
      return Tri::kYes;
    case GraphClass::kIsk4WheelFree: {
      auto a = detect_isk4(g, budget);
      if (a.found()) return Tri::kNo;
      auto w = detect_wheel(g, budget);
      if (w.found()) return Tri::kNo;
      return a.exhaustive && w.exhaustive ? Tri::kYes : Tri::kUnknown;
    }
    case GraphClass::kUniqueChordFree: {
      auto d = detect_unique_chord_cycle(g, budget);
      if (d.found()) return Tri::kNo;
      return d.exhaustive ? Tri::kYes : Tri::kUnknown;
    }
  }
  return Tri::kUnknown;
}

}  // namespace gdt
