#include "gdt/reference.hpp"

#include <algorithm>
#include <numeric>

#include "gdt/rankwidth.hpp"

namespace gdt {
namespace reference {

int treewidth_by_elimination_orderings(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<VSet> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    VSet alive = g.vertices();
    int width = 0;
    for (int v : order) {
      VSet nb = adj[v] & alive & ~bit(v);
      width = std::max(width, popcount(nb));
      if (width >= best) break;
      for (int u : VertexRange{nb}) adj[u] |= nb & ~bit(u);
      alive &= ~bit(v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

namespace {

struct LeafTree {
  std::vector<std::pair<int, int>> edges;
  int next_internal;
};

int tree_width(const Graph& g, const LeafTree& t) {
  int n = g.vertex_count();
  int width = 0;
  for (size_t i = 0; i < t.edges.size(); ++i) {
    auto [a, b] = t.edges[i];
    // Leaves on the a-side of edge i.
    std::vector<int> stack{a};
    std::vector<char> seen(t.next_internal, 0);
    seen[a] = 1;
    seen[b] = 1;  // block crossing
    VSet side = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x < n) side |= bit(x);
      for (auto [p, q] : t.edges) {
        if (p == x && !seen[q]) { seen[q] = 1; stack.push_back(q); }
        if (q == x && !seen[p]) { seen[p] = 1; stack.push_back(p); }
      }
    }
    width = std::max(width, cut_rank(g, side));
  }
  return width;
}

void enumerate_trees(const Graph& g, LeafTree& t, int next_leaf, int& best) {
  int n = g.vertex_count();
  if (next_leaf == n) {
    best = std::min(best, tree_width(g, t));
    return;
  }
  size_t m = t.edges.size();
  for (size_t i = 0; i < m; ++i) {
    auto [a, b] = t.edges[i];
    int mid = t.next_internal++;
    t.edges[i] = {a, mid};
    t.edges.push_back({mid, b});
    t.edges.push_back({mid, next_leaf});
    enumerate_trees(g, t, next_leaf + 1, best);
    t.edges.pop_back();
    t.edges.pop_back();
    t.edges[i] = {a, b};
    t.next_internal--;
  }
}

}  // namespace

int rankwidth_by_tree_enumeration(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  LeafTree t;
  t.edges.push_back({0, 1});
  t.next_internal = n;  // ids: leaves 0..n-1, internals n..2n-3
  int best = n;
  enumerate_trees(g, t, 2, best);
  return best;
}

bool is_subdivision_of_k4(const Graph& h) {
  int n = h.vertex_count();
  if (n < 4 || !is_connected(h)) return false;
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    int d = h.degree(v);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return false;
  }
  if (branch.size() != 4) return false;
  // Walk from each branch vertex along each chain; every unordered pair of
  // branch vertices must be joined by exactly one chain (each chain is
  // seen from both ends).
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  for (int u : branch)
    for (int w : VertexRange{h.neighbors(u)}) {
      int prev = u, cur = w;
      while (h.degree(cur) == 2) {
        VSet nb = h.neighbors(cur) & ~bit(prev);
        prev = cur;
        cur = lowest_vertex(nb);
      }
      if (cur == u) return false;  // chain loops back
      count[std::min(u, cur)][std::max(u, cur)]++;
    }
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (count[std::min(branch[i], branch[j])][std::max(branch[i], branch[j])] != 2)
        return false;
  return true;
}

std::optional<VSet> isk4_by_subsets(const Graph& g) {
  VSet all = g.vertices();
  for (VSet s = all;; s = (s - 1) & all) {
    if (popcount(s) >= 4 && is_subdivision_of_k4(induced_subgraph(g, s))) return s;
    if (s == 0) break;
  }
  return std::nullopt;
}

std::optional<VSet> wheel_by_subsets(const Graph& g) {
  VSet all = g.vertices();
  for (VSet s = all;; s = (s - 1) & all) {
    if (popcount(s) >= 4) {
      bool cyc = is_connected_within(g, s);
      for (int v : VertexRange{s})
        cyc = cyc && popcount(g.neighbors_in(v, s)) == 2;
      if (cyc)
        for (int v : VertexRange{all & ~s})
          if (popcount(g.neighbors_in(v, s)) >= 3) return s | bit(v);
    }
    if (s == 0) break;
  }
  return std::nullopt;
}

namespace {

bool has_hamiltonian_cycle(const Graph& g, VSet s) {
  auto vs = to_vertex_list(s);
  int k = (int)vs.size();
  std::vector<int> rest(vs.begin() + 1, vs.end());
  std::sort(rest.begin(), rest.end());
  do {
    bool ok = g.has_edge(vs[0], rest[0]) && g.has_edge(rest.back(), vs[0]);
    for (int i = 0; ok && i + 1 < k - 1; ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

}  // namespace

std::optional<VSet> unique_chord_cycle_by_subsets(const Graph& g) {
  VSet all = g.vertices();
  for (VSet s = all;; s = (s - 1) & all) {
    if (popcount(s) >= 4) {
      int k = popcount(s);
      if (induced_subgraph(g, s).edge_count() == k + 1 && has_hamiltonian_cycle(g, s))
        return s;
    }
    if (s == 0) break;
  }
  return std::nullopt;
}

}  // namespace reference
}  // namespace gdt
