#include "gdt/rankwidth.hpp"

#include <algorithm>

namespace gdt {

int cut_rank(const Graph& g, VSet s) {
  if (s & ~g.vertices()) throw InputError("cut_rank: vertex out of range");
  VSet other = g.vertices() & ~s;
  int rank = 0;
  std::vector<VSet> rows;
  for (int v : VertexRange{s}) {
    VSet row = g.neighbors(v) & other;
    for (VSet r : rows) {
      VSet low = r & -r;
      if (row & low) row ^= r;
    }
    if (row) {
      rows.push_back(row);
      ++rank;
    }
  }
  return rank;
}

namespace {

VSet leaves_behind(const Graph& tree, int from, int banned, const std::vector<int>& vertex_of_leaf) {
  // Vertices of the host whose leaves lie in the component of `from` when
  // edge (from, banned) is removed.
  VSet nodes = bit(from);
  for (;;) {
    VSet grown = nodes;
    for (int t : VertexRange{nodes}) grown |= tree.neighbors(t);
    grown &= ~bit(banned);
    if (grown == nodes) break;
    nodes = grown;
  }
  VSet verts = 0;
  for (int t : VertexRange{nodes})
    if (vertex_of_leaf[t] >= 0) verts |= bit(vertex_of_leaf[t]);
  return verts;
}

}  // namespace

int rank_decomposition_width(const Graph& g, const RankDecomposition& rd) {
  std::vector<int> vertex_of_leaf(rd.tree.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) vertex_of_leaf[rd.leaf_of_vertex[v]] = v;
  int w = 0;
  for (auto [a, b] : rd.tree.edges())
    w = std::max(w, cut_rank(g, leaves_behind(rd.tree, a, b, vertex_of_leaf)));
  return w;
}

namespace {

struct TreeBuilder {
  const std::vector<std::uint32_t>& pick;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaf_of_vertex;
  int next_node = 0;

  int build(VSet s) {
    int node = next_node++;
    if (popcount(s) == 1) {
      leaf_of_vertex[lowest_vertex(s)] = node;
      return node;
    }
    VSet t = pick[s];
    edges.emplace_back(node, build(t));
    edges.emplace_back(node, build(s & ~t));
    return node;
  }
};

RankDecomposition caterpillar_decomposition(const Graph& g) {
  // Leaves in vertex order along a spine; a usable upper-bound witness
  // when the exact search is out of budget.
  int n = g.vertex_count();
  RankDecomposition rd;
  rd.leaf_of_vertex.resize(n);
  if (n == 1) {
    rd.tree = Graph(1);
    rd.leaf_of_vertex[0] = 0;
    rd.width = 0;
    return rd;
  }
  if (n == 2) {
    rd.tree = Graph(2);
    rd.tree.add_edge(0, 1);
    rd.leaf_of_vertex = {0, 1};
    rd.width = rank_decomposition_width(g, rd);
    return rd;
  }
  // Nodes: leaves 0..n-1, spine n..2n-3.
  rd.tree = Graph(2 * n - 2);
  rd.leaf_of_vertex[0] = 0;
  int prev = n;  // first spine node
  rd.tree.add_edge(0, n);
  rd.tree.add_edge(1, n);
  rd.leaf_of_vertex[1] = 1;
  for (int v = 2; v < n; ++v) {
    if (v == n - 1) {
      rd.tree.add_edge(prev, v);
    } else {
      int spine = n + v - 1;
      rd.tree.add_edge(prev, spine);
      rd.tree.add_edge(spine, v);
      prev = spine;
    }
    rd.leaf_of_vertex[v] = v;
  }
  rd.width = rank_decomposition_width(g, rd);
  return rd;
}

}  // namespace

RankwidthResult rankwidth_exact(const Graph& g, Budget budget) {
  int n = g.vertex_count();
  RankwidthResult r;
  if (n == 0) {
    r.exact = true;
    return r;
  }
  if (n == 1) {
    r.exact = true;
    r.witness = caterpillar_decomposition(g);
    return r;
  }

  std::uint64_t pairs = 1;
  for (int i = 0; i < n; ++i) pairs *= 3;
  if (n > 16 || pairs > budget.limit) {
    if (2 * n - 2 > Graph::kMaxVertices) {
      r.exact = false;
      r.lower = 0;
      r.upper = n;
      return r;
    }
    auto rd = caterpillar_decomposition(g);
    r.exact = rd.width == 0;
    r.lower = 0;
    r.upper = rd.width;
    r.witness = std::move(rd);
    return r;
  }

  std::size_t states = std::size_t{1} << n;
  std::vector<int8_t> cr(states), f(states, 127);
  for (std::size_t s = 1; s < states; ++s) cr[s] = (int8_t)cut_rank(g, (VSet)s);
  std::vector<std::uint32_t> pick(states, 0);

  for (std::size_t s = 1; s < states; ++s) {
    if (popcount((VSet)s) == 1) {
      f[s] = cr[s];
      continue;
    }
    VSet low = (VSet)s & -(VSet)s;
    int best = 127;
    std::uint32_t best_t = 0;
    for (VSet t = ((VSet)s - 1) & (VSet)s; t; t = (t - 1) & (VSet)s) {
      if (!(t & low)) continue;
      int cand = std::max(f[t], f[(VSet)s & ~t]);
      if (cand < best) {
        best = cand;
        best_t = (std::uint32_t)t;
      }
    }
    // The cut above this subtree also counts, except at the whole set.
    if (s != states - 1) best = std::max(best, (int)cr[s]);
    f[s] = (int8_t)best;
    pick[s] = best_t;
  }

  r.exact = true;
  r.lower = r.upper = f[states - 1];

  TreeBuilder tb{pick, {}, std::vector<int>(n, -1), 0};
  VSet t0 = pick[states - 1];
  int a = tb.build(t0);
  int b = tb.build(g.vertices() & ~t0);
  tb.edges.emplace_back(a, b);
  RankDecomposition rd;
  rd.tree = Graph(tb.next_node);
  for (auto [x, y] : tb.edges) rd.tree.add_edge(x, y);
  rd.leaf_of_vertex = tb.leaf_of_vertex;
  rd.width = r.upper;
  r.witness = std::move(rd);
  return r;
}

}  // namespace gdt
