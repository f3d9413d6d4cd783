#include "gdt/treewidth.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gdt {

int TreeDecomposition::width() const {
  int w = -1;
  for (VSet b : bags) w = std::max(w, popcount(b) - 1);
  return w;
}

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  TdValidation r;
  if (td.bags.size() != (size_t)td.tree.vertex_count())
    throw InputError("bag count does not match tree");
  for (VSet b : td.bags)
    if (b & ~g.vertices()) throw InputError("bag references unknown vertex");
  r.width = td.width();

  VSet covered = 0;
  for (VSet b : td.bags) covered |= b;
  r.covers_vertices = covered == g.vertices();
  if (!r.covers_vertices) r.missing_vertex = lowest_vertex(g.vertices() & ~covered);

  r.covers_edges = true;
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (VSet b : td.bags)
      if (contains(b, u) && contains(b, v)) {
        found = true;
        break;
      }
    if (!found) {
      r.covers_edges = false;
      r.missing_edge = {u, v};
      break;
    }
  }

  r.subtrees_connected = true;
  for (int v : VertexRange{g.vertices()}) {
    VSet nodes = 0;
    for (size_t i = 0; i < td.bags.size(); ++i)
      if (contains(td.bags[i], v)) nodes |= bit((int)i);
    if (nodes && !is_connected_within(td.tree, nodes)) {
      r.subtrees_connected = false;
      r.broken_vertex = v;
      break;
    }
  }
  return r;
}

namespace {

// Number of vertices outside S u {v} reachable from v through S.
int eliminated_degree(const Graph& g, VSet s, int v) {
  VSet inside = g.neighbors_in(v, s);
  for (;;) {
    VSet grown = inside;
    for (int w : VertexRange{inside}) grown |= g.neighbors_in(w, s);
    if (grown == inside) break;
    inside = grown;
  }
  VSet outside = g.neighbors(v);
  for (int w : VertexRange{inside}) outside |= g.neighbors(w);
  outside &= ~(s | bit(v));
  return popcount(outside);
}

}  // namespace

int greedy_upper_bound(const Graph& g, std::vector<int>* order_out) {
  int n = g.vertex_count();
  std::vector<VSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VSet alive = g.vertices();
  std::vector<int> order;
  int width = -1;
  while (alive) {
    int best = -1, best_fill = 1 << 30, best_deg = 1 << 30;
    for (int v : VertexRange{alive}) {
      VSet nb = adj[v] & alive;
      int fill = 0;
      for (int u : VertexRange{nb}) fill += popcount(nb & ~adj[u] & ~bit(u));
      int deg = popcount(nb);
      if (fill < best_fill || (fill == best_fill && deg < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    VSet nb = adj[best] & alive;
    width = std::max(width, popcount(nb));
    for (int u : VertexRange{nb}) adj[u] |= nb & ~bit(u);
    alive &= ~bit(best);
    order.push_back(best);
  }
  if (order_out) *order_out = std::move(order);
  return width;
}

int degeneracy(const Graph& g) {
  VSet alive = g.vertices();
  int d = 0;
  while (alive) {
    int best = -1, bd = 1 << 30;
    for (int v : VertexRange{alive}) {
      int deg = popcount(g.neighbors_in(v, alive));
      if (deg < bd) {
        bd = deg;
        best = v;
      }
    }
    d = std::max(d, bd);
    alive &= ~bit(best);
  }
  return d;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  if (n == 0) {
    TreeDecomposition td;
    td.tree = Graph(1);
    td.bags = {0};
    return td;
  }
  std::vector<VSet> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  VSet alive = g.vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  TreeDecomposition td;
  td.tree = Graph(n);
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VSet nb = adj[v] & alive & ~bit(v);
    td.bags[i] = nb | bit(v);
    for (int u : VertexRange{nb}) adj[u] |= nb & ~bit(u);
    alive &= ~bit(v);
    if (nb) {
      int parent = n;
      for (int u : VertexRange{nb}) parent = std::min(parent, pos[u]);
      td.tree.add_edge(i, parent);
    } else if (i + 1 < n) {
      td.tree.add_edge(i, i + 1);
    }
  }
  return td;
}

WidthResult treewidth_exact(const Graph& g, Budget budget) {
  int n = g.vertex_count();
  WidthResult r;
  if (n == 0) {
    r.exact = true;
    r.lower = r.upper = -1;
    r.witness = decomposition_from_order(g, {});
    return r;
  }

  std::vector<int> greedy_order;
  int ub = greedy_upper_bound(g, &greedy_order);
  int lb = degeneracy(g);

  if (n > 26 || (VSet{1} << n) > budget.limit) {
    r.exact = lb == ub;
    r.lower = lb;
    r.upper = ub;
    r.witness = decomposition_from_order(g, greedy_order);
    return r;
  }

  std::size_t states = std::size_t{1} << n;
  std::vector<int8_t> f(states, 0), pick(states, -1);
  f[0] = -1;

  auto solve_state = [&](std::size_t s) {
    int best = 127, best_v = -1;
    for (int v : VertexRange{(VSet)s}) {
      VSet rest = (VSet)s & ~bit(v);
      int cand = std::max<int>(f[rest], eliminated_degree(g, rest, v));
      if (cand < best) {
        best = cand;
        best_v = v;
      }
    }
    f[s] = (int8_t)best;
    pick[s] = (int8_t)best_v;
  };

#ifdef _OPENMP
  if (n >= 18) {
    // Layered by popcount so every f(S \ v) lookup hits the previous layer.
    for (int k = 1; k <= n; ++k) {
      std::vector<std::uint32_t> layer;
      VSet s = (VSet{1} << k) - 1;
      VSet limit = VSet{1} << n;
      while (s < limit) {
        layer.push_back((std::uint32_t)s);
        VSet c = s & -s;
        VSet rr = s + c;
        s = rr | (((s ^ rr) >> 2) / c);
      }
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)layer.size(); ++i) solve_state(layer[i]);
    }
  } else
#endif
  {
    for (std::size_t s = 1; s < states; ++s) solve_state(s);
  }

  r.exact = true;
  r.lower = r.upper = f[states - 1];

  std::vector<int> order(n);
  VSet s = g.vertices();
  for (int i = n - 1; i >= 0; --i) {
    int v = pick[s];
    order[i] = v;
    s &= ~bit(v);
  }
  r.witness = decomposition_from_order(g, order);
  return r;
}

}  // namespace gdt
