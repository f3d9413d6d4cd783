#include "gdt/graph.hpp"

#include <algorithm>
#include <functional>

namespace gdt {

std::vector<int> to_vertex_list(VSet s) {
  std::vector<int> out;
  for (int v : VertexRange{s}) out.push_back(v);
  return out;
}

VSet from_vertex_list(const std::vector<int>& vs) {
  VSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("vertex count out of range: " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop rejected");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexRange{adj_[u] & ~((bit(u) << 1) - 1)}) out.emplace_back(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VSet s, std::vector<int>* old_labels) {
  if ((s & ~g.vertices()) != 0) throw InputError("induced_subgraph: vertex out of range");
  std::vector<int> old_of_new = to_vertex_list(s);
  std::vector<int> new_of_old(g.vertex_count(), -1);
  for (size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = (int)i;
  Graph h((int)old_of_new.size());
  for (size_t i = 0; i < old_of_new.size(); ++i)
    for (int w : VertexRange{g.neighbors_in(old_of_new[i], s)})
      if (new_of_old[w] > (int)i) h.add_edge((int)i, new_of_old[w]);
  if (old_labels) *old_labels = std::move(old_of_new);
  return h;
}

Graph subdivide_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
    throw InputError("subdivide_edge: not an edge");
  int n = g.vertex_count();
  if (n + 1 > Graph::kMaxVertices) throw InputError("subdivide_edge: graph too large");
  Graph h(n + 1);
  for (auto [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
  h.add_edge(u, n);
  h.add_edge(v, n);
  return h;
}

Graph line_graph(const Graph& g, std::vector<std::pair<int, int>>* vertex_to_edge) {
  auto es = g.edges();
  if ((int)es.size() > Graph::kMaxVertices) throw InputError("line_graph: too many edges");
  Graph h((int)es.size());
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) h.add_edge((int)i, (int)j);
    }
  if (vertex_to_edge) *vertex_to_edge = std::move(es);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<VSet> components_within(const Graph& g, VSet within) {
  std::vector<VSet> out;
  VSet left = within;
  while (left) {
    VSet comp = bit(lowest_vertex(left));
    for (;;) {
      VSet grown = comp;
      for (int v : VertexRange{comp}) grown |= g.neighbors_in(v, within);
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  // Deterministic by minimum vertex identifier: the loop above already
  // produces that order.
  return out;
}

std::vector<VSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected_within(const Graph& g, VSet within) {
  if (within == 0) return true;
  return components_within(g, within).size() == 1;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return is_connected_within(g, g.vertices());
}

bool is_complete_between(const Graph& g, VSet x, VSet y) {
  if (x & y) throw InputError("sets must be disjoint");
  for (int v : VertexRange{x})
    if ((g.neighbors(v) & y) != y) return false;
  return true;
}

bool is_anticomplete_between(const Graph& g, VSet x, VSet y) {
  if (x & y) throw InputError("sets must be disjoint");
  for (int v : VertexRange{x})
    if (g.neighbors(v) & y) return false;
  return true;
}

bool is_clique(const Graph& g, VSet s) {
  for (int v : VertexRange{s})
    if ((g.neighbors_in(v, s) | bit(v)) != s) return false;
  return true;
}

bool is_stable(const Graph& g, VSet s) {
  for (int v : VertexRange{s})
    if (g.neighbors_in(v, s)) return false;
  return true;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<VSet> blocks;
  int counter = 0;

  explicit BlockFinder(const Graph& gg)
      : g(gg), num(gg.vertex_count(), -1), low(gg.vertex_count(), 0) {}

  void emit(int u, int v) {
    VSet blk = 0;
    std::pair<int, int> e;
    do {
      e = stack.back();
      stack.pop_back();
      blk |= bit(e.first) | bit(e.second);
    } while (e != std::make_pair(u, v));
    blocks.push_back(blk);
  }

  void dfs(int u, int parent) {
    num[u] = low[u] = counter++;
    for (int v : VertexRange{g.neighbors(u)}) {
      if (v == parent) {
        parent = -1;  // skip the tree edge once; parallel edges cannot occur
        continue;
      }
      if (num[v] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) emit(u, v);
      } else if (num[v] < num[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], num[v]);
      }
    }
  }
};

}  // namespace

std::vector<VSet> biconnected_blocks(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (bf.num[v] == -1) bf.dfs(v, -1);
  return bf.blocks;
}

Graph path_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph petersen() {
  // Outer 5-cycle 0..4, inner 5-star 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph heawood() {
  // Standard cyclic construction: 14-cycle plus chords i -- i+5 for even i.
  Graph g(14);
  for (int i = 0; i < 14; ++i) g.add_edge(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
  return g;
}

Graph wall(int t) {
  if (t < 1) throw InputError("wall: t must be positive");
  // Grid of (t+1) rows by 2(t+1) columns; keep horizontal edges, and
  // vertical edges (r,c)-(r+1,c) when r+c is even; trim degree-1 corners.
  int rows = t + 1, cols = 2 * (t + 1);
  auto id = [&](int r, int c) { return r * cols + c; };
  int n = rows * cols;
  std::vector<std::pair<int, int>> es;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows && (r + c) % 2 == 0) es.emplace_back(id(r, c), id(r + 1, c));
    }
  std::vector<int> deg(n, 0);
  for (auto [u, v] : es) ++deg[u], ++deg[v];
  std::vector<int> newid(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 2) newid[v] = m++;
  if (m > Graph::kMaxVertices) throw InputError("wall: too large");
  Graph g(m);
  for (auto [u, v] : es)
    if (newid[u] >= 0 && newid[v] >= 0) g.add_edge(newid[u], newid[v]);
  return g;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, VSet used, int next) {
  if (next == a.vertex_count()) return true;
  for (int w = 0; w < b.vertex_count(); ++w) {
    if (contains(used, w)) continue;
    bool ok = true;
    for (int u = 0; u < next && ok; ++u)
      if (a.has_edge(u, next) != b.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[next] = w;
    if (extend_iso(a, b, map, used | bit(w), next + 1)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.vertex_count(), -1);
  return extend_iso(a, b, map, 0, 0);
}

}  // namespace gdt
