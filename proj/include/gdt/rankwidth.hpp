#pragma once

#include <optional>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/graph.hpp"

namespace gdt {

// Subcubic tree whose leaves biject to vertices of the host graph.
struct RankDecomposition {
  Graph tree;
  std::vector<int> leaf_of_vertex;  // tree node carrying each host vertex
  int width = 0;
};

// GF(2) rank of the bipartite adjacency matrix between s and its
// complement.  Symmetric: cut_rank(g, s) == cut_rank(g, V \ s).
int cut_rank(const Graph& g, VSet s);

// Recompute the width of a rank decomposition from its tree (max cut
// rank over tree edges).
int rank_decomposition_width(const Graph& g, const RankDecomposition& rd);

struct RankwidthResult {
  bool exact = false;
  int lower = 0;
  int upper = 0;
  std::optional<RankDecomposition> witness;
  int width() const { return upper; }
};

// Exact rankwidth by dynamic programming over vertex subsets: the optimum
// over all subcubic leaf-labelled trees decomposes along the root split.
// Feasible to n around 13; beyond the budget a trivial [0, n] bound pair
// is returned.
RankwidthResult rankwidth_exact(const Graph& g, Budget budget = {});

}  // namespace gdt
