#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdt {

// Vertex sets are bitmasks; every graph in this toolkit has at most 62
// vertices (the graph6 single-byte size limit).
using VSet = std::uint64_t;

inline int popcount(VSet s) { return std::popcount(s); }
inline int lowest_vertex(VSet s) { return std::countr_zero(s); }
inline VSet bit(int v) { return VSet{1} << v; }
inline bool contains(VSet s, int v) { return (s >> v) & 1; }

// Iterate "for (int v : VertexRange(mask))".
struct VertexRange {
  VSet mask;
  struct iterator {
    VSet rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {mask}; }
  iterator end() const { return {0}; }
};

std::vector<int> to_vertex_list(VSet s);
VSet from_vertex_list(const std::vector<int>& vs);

// Immutable simple undirected graph with dense vertex identifiers 0..n-1.
// Edges are added during construction only; all operations below return
// new graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  VSet vertices() const { return n_ == 0 ? 0 : (~VSet{0} >> (64 - n_)); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VSet neighbors(int v) const { return adj_[v]; }
  VSet neighbors_in(int v, VSet s) const { return adj_[v] & s; }
  int degree(int v) const { return popcount(adj_[v]); }
  int max_degree() const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::vector<VSet> adj_;

  void check_vertex(int v) const;
};

// Elementary constructions.  induced_subgraph relabels the kept vertices
// 0..|s|-1 in increasing order of their old identifiers; old_labels, when
// non-null, receives the old identifier of each new vertex.
Graph induced_subgraph(const Graph& g, VSet s, std::vector<int>* old_labels = nullptr);
Graph subdivide_edge(const Graph& g, int u, int v);
Graph line_graph(const Graph& g, std::vector<std::pair<int, int>>* vertex_to_edge = nullptr);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

std::vector<VSet> components(const Graph& g);
// Components of the subgraph induced by `within`.
std::vector<VSet> components_within(const Graph& g, VSet within);
bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, VSet within);

bool is_complete_between(const Graph& g, VSet x, VSet y);
bool is_anticomplete_between(const Graph& g, VSet x, VSet y);
bool is_clique(const Graph& g, VSet s);
bool is_stable(const Graph& g, VSet s);

// Biconnected components, as vertex sets; bridges appear as 2-vertex blocks.
std::vector<VSet> biconnected_blocks(const Graph& g);

// Named graphs.
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph heawood();
// Brick wall with t rows of t bricks; see docs/wall.md for the coordinate
// construction.  Usable for t <= 3 pattern searches.
Graph wall(int t);

// Plain-labelled isomorphism test by backtracking; both graphs small.
bool isomorphic(const Graph& a, const Graph& b);

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace gdt
