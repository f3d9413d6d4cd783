#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/cutsets.hpp"
#include "gdt/graph.hpp"
#include "gdt/recognize.hpp"

namespace gdt {

// No clique cutset and no proper 2-cutset.
bool is_prime(const Graph& g, Budget budget = {});

// Atoms of a clique-cutset decomposition, with original labels.
struct Atom {
  Graph graph;
  std::vector<int> old_labels;
};
std::vector<Atom> clique_cutset_atoms(const Graph& g, Budget budget = {});

// Atom of maximum treewidth (tie-break: smaller canonical encoding).
Atom clique_cutset_atom_of_max_tw(const Graph& g, Budget budget = {});

enum class TraceRule {
  kInitial,
  kCliqueCutsetAtom,
  kTwoCutsetClosure,
  kTwoCutsetStrongClosure,
};
std::string to_string(TraceRule r);

struct TraceStep {
  Graph graph;
  TraceRule rule = TraceRule::kInitial;
  // Original input label per vertex; -1 for subdivision markers.
  std::vector<int> old_labels;
  // Witness in the labels of the previous step's graph.
  VSet cutset = 0;
  std::optional<int> width;  // filled when computed along the way
};

struct DecompositionTrace {
  std::vector<TraceStep> steps;
  bool complete = true;  // false when the budget ran out mid-trace
  const Graph& base() const { return steps.back().graph; }
};

// The alternating prime decomposition: odd steps extract a clique-cutset
// atom of maximum treewidth, even steps pick a closure or strong closure
// (within the class filter) of maximum treewidth.  Throws
// NotTwoCutsetSafe when no closure of any component stays in the class.
DecompositionTrace prime_decompose(const Graph& g, GraphClass filter, Budget budget = {},
                                   bool one_cutsets_only = false);

struct NotTwoCutsetSafe : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimeBaseReport {
  int input_tw = -1;
  int base_tw = -1;
  std::size_t trace_length = 0;
  bool stepwise_equal = true;  // tw preserved at every consecutive pair
  bool equal = false;
};

PrimeBaseReport verify_prime_base_theorem(const Graph& g, GraphClass filter,
                                          Budget budget = {});

// Total order on graphs used for deterministic tie-breaks.
bool canonical_less(const Graph& a, const Graph& b);

}  // namespace gdt
