#pragma once

#include <optional>

#include "gdt/graph.hpp"

namespace gdt {
namespace reference {

// Serial brute-force oracles, deliberately independent of the main
// solvers.  Exponential in ways the solvers are not; keep n tiny.

// Minimum over all n! elimination orderings (n <= 9 or so).
int treewidth_by_elimination_orderings(const Graph& g);

// Minimum width over every subcubic leaf-labelled tree (n <= 7 or so).
int rankwidth_by_tree_enumeration(const Graph& g);

// Subset scans.
std::optional<VSet> isk4_by_subsets(const Graph& g);
std::optional<VSet> wheel_by_subsets(const Graph& g);           // hole length >= 4
std::optional<VSet> unique_chord_cycle_by_subsets(const Graph& g);

// True iff h is a subdivision of K4 (h as a whole graph).
bool is_subdivision_of_k4(const Graph& h);

}  // namespace reference
}  // namespace gdt
