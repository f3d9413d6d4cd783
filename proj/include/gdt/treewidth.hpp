#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/graph.hpp"

namespace gdt {

struct TreeDecomposition {
  Graph tree;              // acyclic connected graph on bag nodes
  std::vector<VSet> bags;  // one bag per tree node, vertices of the host
  int width() const;
};

struct TdValidation {
  bool covers_vertices = false;  // property (i)
  bool covers_edges = false;     // property (ii)
  bool subtrees_connected = false;  // property (iii)
  int missing_vertex = -1;
  std::pair<int, int> missing_edge{-1, -1};
  int broken_vertex = -1;
  int width = -1;
  bool valid() const { return covers_vertices && covers_edges && subtrees_connected; }
};

TdValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

struct WidthResult {
  bool exact = false;
  int lower = 0;   // certified lower bound; equals upper when exact
  int upper = 0;
  std::optional<TreeDecomposition> witness;
  int width() const { return upper; }
};

// Exact treewidth by dynamic programming over vertex subsets (elimination
// DP).  The budget limits the number of DP states; on exhaustion the
// result carries a degeneracy lower bound and a min-fill upper bound with
// its greedy decomposition as witness.
WidthResult treewidth_exact(const Graph& g, Budget budget = {});

// Build a tree decomposition from an elimination order (bags are the
// vertex plus its fill-in neighborhood at elimination time).
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

// Greedy min-fill upper bound.
int greedy_upper_bound(const Graph& g, std::vector<int>* order = nullptr);
// Degeneracy, a lower bound for treewidth.
int degeneracy(const Graph& g);

}  // namespace gdt
