#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/detect.hpp"
#include "gdt/graph.hpp"

namespace gdt {

enum class BasicClass {
  kSeriesParallel,
  kLineOfChordlessSubcubic,
  kCompleteBipartite,
  kLongRichSquare,
  kStronglyTwoBipartite,
  kHoleAtLeast7,
  kClique,
  kPetersenEmbedded,
  kHeawoodEmbedded,
  kNone,
};

std::string to_string(BasicClass c);

struct ClassLabel {
  BasicClass kind = BasicClass::kNone;
  bool exhaustive = true;           // false when a sub-search ran out of budget
  std::optional<Graph> root;        // line-of-chordless-subcubic
  VSet central_square = 0;          // long rich square
  VSet side_x = 0, side_y = 0;      // strongly 2-bipartite / complete bipartite
  std::vector<int> embedding;       // petersen / heawood injection
};

// Any Krausz partition root: a graph H with L(H) isomorphic to g (with the
// correspondence fixed by construction).  nullopt when g is not a line graph.
std::optional<Graph> line_graph_root(const Graph& g, Budget budget = {});

// Root that is additionally chordless with maximum degree <= 3.
std::optional<Graph> recognize_line_of_chordless_subcubic(const Graph& g, Budget budget = {});

// Every cycle of g is chordless.
bool is_chordless_graph(const Graph& g);

// Operational criterion: every biconnected component has treewidth <= 2.
bool is_series_parallel(const Graph& g);

bool is_complete_bipartite_graph(const Graph& g, VSet* x = nullptr, VSet* y = nullptr);

// Central 4-hole whose removal leaves attachment paths pinned to opposite
// square edges; interior of each path anticomplete to the square.
std::optional<VSet> long_rich_square_center(const Graph& g);

// Bipartition (X, Y) with X-degrees exactly 2 and Y-degrees >= 3, graph
// bipartite and C4-free.
std::optional<std::pair<VSet, VSet>> strongly_2bipartite_partition(const Graph& g);

enum class FixedHost { kPetersen, kHeawood };
std::optional<std::vector<int>> embeds_in_fixed_host(const Graph& g, FixedHost host);

ClassLabel recognize_basic_isk4(const Graph& g, Budget budget = {});
ClassLabel recognize_basic_unique_chord(const Graph& g, Budget budget = {});

// Hereditary class membership by exhaustive detectors.
enum class GraphClass { kAllGraphs, kIsk4WheelFree, kUniqueChordFree };
std::string to_string(GraphClass c);
Tri in_class(const Graph& g, GraphClass c, Budget budget = {});

}  // namespace gdt
