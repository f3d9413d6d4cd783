#include "gdt/generate.hpp"

#include <stdexcept>

namespace gdt {

Graph random_graph(int n, int edge_percent, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_percent)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(int n, int edge_percent, std::uint64_t seed) {
  for (int attempt = 0;; ++attempt) {
    Graph g = random_graph(n, edge_percent, seed + 0x1000 * attempt);
    if (is_connected(g)) return g;
    if (attempt > 5000) throw std::runtime_error("random_connected_graph: rejection stalled");
  }
}

namespace {

bool two_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (!is_connected_within(g, g.vertices() & ~bit(v))) return false;
  return true;
}

}  // namespace

Graph random_two_connected_graph(int n, int edge_percent, std::uint64_t seed) {
  for (int attempt = 0;; ++attempt) {
    Graph g = random_graph(n, edge_percent, seed + 0x1000 * attempt);
    if (two_connected(g)) return g;
    if (attempt > 20000) throw std::runtime_error("random_two_connected_graph: rejection stalled");
  }
}

Graph subdivide_random_edges(const Graph& g, int count, std::uint64_t seed) {
  Rng rng(seed);
  Graph cur = g;
  for (int i = 0; i < count; ++i) {
    auto es = cur.edges();
    if (es.empty()) break;
    auto [u, v] = es[rng.below(es.size())];
    cur = subdivide_edge(cur, u, v);
  }
  return cur;
}

namespace {

bool find_k_clique(const Graph& g, int k, VSet cur, int min_next, VSet* out) {
  if (popcount(cur) == k) {
    *out = cur;
    return true;
  }
  for (int v = min_next; v < g.vertex_count(); ++v) {
    if ((g.neighbors(v) & cur) != cur) continue;
    if (find_k_clique(g, k, cur | bit(v), v + 1, out)) return true;
  }
  return false;
}

}  // namespace

Graph glue_on_clique(const Graph& g1, const Graph& g2, int k) {
  VSet c1 = 0, c2 = 0;
  if (!find_k_clique(g1, k, 0, 0, &c1) || !find_k_clique(g2, k, 0, 0, &c2))
    throw InputError("glue_on_clique: missing a clique of the requested size");
  auto shared1 = to_vertex_list(c1), shared2 = to_vertex_list(c2);
  int n1 = g1.vertex_count();
  // Map: g1 keeps its labels; g2's clique vertices land on g1's clique,
  // the rest follow after.
  std::vector<int> map2(g2.vertex_count(), -1);
  for (int i = 0; i < k; ++i) map2[shared2[i]] = shared1[i];
  int next = n1;
  for (int v = 0; v < g2.vertex_count(); ++v)
    if (map2[v] < 0) map2[v] = next++;
  Graph g(next);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    if (!g.has_edge(map2[u], map2[v])) g.add_edge(map2[u], map2[v]);
  return g;
}

Graph glue_on_pair(const Graph& g1, int u1, int v1, const Graph& g2, int u2, int v2) {
  if (u1 == v1 || u2 == v2) throw InputError("glue_on_pair: vertices must be distinct");
  int n1 = g1.vertex_count();
  std::vector<int> map2(g2.vertex_count());
  int next = n1;
  for (int v = 0; v < g2.vertex_count(); ++v)
    map2[v] = v == u2 ? u1 : v == v2 ? v1 : next++;
  Graph g(next);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges())
    if (!g.has_edge(map2[u], map2[v])) g.add_edge(map2[u], map2[v]);
  return g;
}

Graph compose_one_join(const Graph& gx, int b, const Graph& gy, int a) {
  VSet an = gx.neighbors(b), bn = gy.neighbors(a);
  if (!an || !bn) throw InputError("compose_one_join: marker vertices must have neighbors");
  int nx = gx.vertex_count();
  // gx keeps labels except b is dropped; gy's vertices (minus a) follow.
  std::vector<int> mapx(nx, -1), mapy(gy.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < nx; ++v)
    if (v != b) mapx[v] = next++;
  for (int v = 0; v < gy.vertex_count(); ++v)
    if (v != a) mapy[v] = next++;
  Graph g(next);
  for (auto [u, v] : gx.edges())
    if (u != b && v != b) g.add_edge(mapx[u], mapx[v]);
  for (auto [u, v] : gy.edges())
    if (u != a && v != a) g.add_edge(mapy[u], mapy[v]);
  for (int u : VertexRange{an})
    for (int v : VertexRange{bn}) g.add_edge(mapx[u], mapy[v]);
  return g;
}

Graph long_rich_square_graph(const std::vector<int>& path_lengths, std::uint64_t seed) {
  Rng rng(seed);
  int n = 4;
  for (int len : path_lengths) {
    if (len < 2) throw InputError("long_rich_square_graph: paths need >= 2 vertices");
    n += len;
  }
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  int next = 4;
  for (int len : path_lengths) {
    // Pin the ends to a pair of opposite square edges.
    bool horizontal = rng.chance(50), flip = rng.chance(50);
    int first = next, last = next + len - 1;
    for (int i = first; i < last; ++i) g.add_edge(i, i + 1);
    int ea = horizontal ? 0 : 1;  // edge {ea, ea+1} vs {ea+2, (ea+3)%4}
    int head = flip ? last : first, tail = flip ? first : last;
    g.add_edge(head, ea);
    g.add_edge(head, ea + 1);
    g.add_edge(tail, ea + 2);
    g.add_edge(tail, (ea + 3) % 4);
    next += len;
  }
  return g;
}

Graph strongly_2bipartite_graph(int base_n, std::uint64_t seed) {
  if (base_n < 4) throw InputError("strongly_2bipartite_graph: need base_n >= 4");
  Rng rng(seed);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    Graph h = random_graph(base_n, 60, seed + 0x1000 * attempt + 1);
    bool ok = is_connected(h);
    for (int v = 0; ok && v < base_n; ++v) ok = h.degree(v) >= 3;
    if (!ok) continue;
    // Subdividing every edge once makes the graph bipartite with the old
    // vertices on the degree >= 3 side and the new ones on the degree-2
    // side, and kills every 4-cycle.
    Graph g(base_n + h.edge_count());
    int next = base_n;
    for (auto [u, v] : h.edges()) {
      g.add_edge(u, next);
      g.add_edge(next, v);
      ++next;
    }
    (void)rng;
    return g;
  }
  throw std::runtime_error("strongly_2bipartite_graph: rejection stalled");
}

Graph theta_chain(int rounds, std::uint64_t seed, bool avoid_adjacent_attach) {
  Rng rng(seed);
  Graph g = cycle_graph(4 + (int)rng.below(3));
  for (int i = 0; i < rounds; ++i) {
    int n = g.vertex_count();
    int u = (int)rng.below(n), v = (int)rng.below(n);
    if (u == v) continue;
    if (avoid_adjacent_attach && g.has_edge(u, v)) continue;
    int interior = 1 + (int)rng.below(3);
    if (n + interior > 14) break;
    Graph next(n + interior);
    for (auto [a, b] : g.edges()) next.add_edge(a, b);
    int prev = u;
    for (int j = 0; j < interior; ++j) {
      next.add_edge(prev, n + j);
      prev = n + j;
    }
    next.add_edge(prev, v);
    g = next;
  }
  return g;
}

Graph generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "petersen") return petersen();
  if (f == "heawood") return heawood();
  if (f == "wall") return wall(spec.t);
  if (f == "line-of-wall") return line_graph(wall(spec.t));
  if (f == "random") return random_graph(spec.n, spec.percent, spec.seed);
  if (f == "random-connected") return random_connected_graph(spec.n, spec.percent, spec.seed);
  if (f == "cycle") return cycle_graph(spec.n);
  if (f == "path") return path_graph(spec.n);
  if (f == "clique") return complete_graph(spec.n);
  if (f == "biclique") return complete_bipartite(spec.n, spec.m);
  if (f == "long-rich-square") {
    std::vector<int> lens = spec.lengths;
    if (lens.empty()) lens = {2, 3};
    return long_rich_square_graph(lens, spec.seed);
  }
  if (f == "strongly-2-bipartite") return strongly_2bipartite_graph(spec.n ? spec.n : 4, spec.seed);
  if (f == "theta-chain") return theta_chain(spec.m ? spec.m : 3, spec.seed, true);
  if (f == "subdivided-clique")
    return subdivide_random_edges(complete_graph(spec.n ? spec.n : 4), spec.m, spec.seed);
  throw InputError("unknown generator family: " + f);
}

}  // namespace gdt
