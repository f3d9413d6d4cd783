#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/graph.hpp"

namespace gdt {

enum class CutKind {
  kOneCutset,
  kCliqueCutset,
  kTwoCutset,
  kProperTwoCutset,
  kOneJoin,
  kProperOneJoin,
};

std::string to_string(CutKind k);

struct CutsetFinding {
  CutKind kind;
  // Cutset kinds: `witness` is the removed set (vertex, clique, or pair);
  // `side_components` the components of g minus the witness, and for a
  // proper 2-cutset `side_x` / `side_y` the two anticomplete sides.
  VSet witness = 0;
  std::vector<VSet> side_components;
  VSet side_x = 0, side_y = 0;
  // 1-join kinds use the (X, Y, A, B) partition instead.
  VSet x = 0, y = 0, a = 0, b = 0;
};

// Re-verification of a finding against its definition; every finder
// checks its own result through this before returning.
bool verify_finding(const Graph& g, const CutsetFinding& f);

// Articulation vertices of a connected graph, sorted.
std::vector<int> find_one_cutsets(const Graph& g);

// All minimal separators (Berry-Bordat-Cogis generation), deterministic
// order by (size, mask).
std::vector<VSet> minimal_separators(const Graph& g, Budget budget = {});

// Smallest clique cutset (ties by mask), if any.
std::optional<CutsetFinding> find_clique_cutset(const Graph& g, Budget budget = {});

// All proper 2-cutsets with their side partitions.
std::vector<CutsetFinding> find_proper_two_cutsets(const Graph& g);
// Pairs whose removal disconnects (proper or not).
std::vector<CutsetFinding> find_two_cutsets(const Graph& g);

struct Closure {
  Graph graph;
  std::vector<int> old_labels;  // original label per closure vertex, -1 for the marker
  int u = -1, v = -1;           // the cutset pair, in closure labels
  int marker = -1;              // strong closure only
};

Closure closure(const Graph& g, int u, int v, VSet component);
Closure strong_closure(const Graph& g, int u, int v, VSet component);

struct OneJoinSearch {
  std::optional<CutsetFinding> finding;
  bool exhaustive = true;
};

// Exhaustive scan over bipartitions; proper requires A, B stable of size
// >= 2 and |X|, |Y| >= 2.
OneJoinSearch find_proper_one_join(const Graph& g, Budget budget = {});
OneJoinSearch find_one_join(const Graph& g, Budget budget = {});

// Proper 1-joins whose A and B both avoid `marker`.  Such a join of a
// strong closure lifts back to the host graph; ones through the
// subdivision marker need not (a single-vertex component closes to a C4
// whose only proper 1-join runs through the marker).
OneJoinSearch find_proper_one_join_avoiding(const Graph& g, int marker, Budget budget = {});

// Blocks induced(X + b) and induced(Y + a) with a, b the minimum
// identifiers in A and B.  Labels of the originals are reported.
std::pair<Closure, Closure> one_join_blocks(const Graph& g, const CutsetFinding& join);

}  // namespace gdt
