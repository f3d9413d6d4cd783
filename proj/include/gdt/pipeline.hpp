#pragma once

#include <optional>
#include <string>

#include "gdt/budget.hpp"
#include "gdt/graph.hpp"
#include "gdt/recognize.hpp"

namespace gdt {

struct BoundReport {
  GraphClass which = GraphClass::kAllGraphs;
  int t = 0;
  ClassLabel base_label;
  Graph base{0};
  int base_tw = -1;
  std::optional<int> input_tw;        // exact solve when the budget allows
  std::optional<int> concrete_bound;  // per-case numeric bound, when one exists
  std::string symbolic_bound;         // in f(t) and R_upper(t,t)
  int trace_steps = 0;

  // unique-chord pipeline only
  int join_reductions = 0;
  std::optional<int> input_rw, reduced_rw;

  bool structure_ok = true;  // base matched a case of the structure theorem
  bool widths_ok = true;     // every computed width relation held
  bool budget_ok = true;
  std::string verdict;
  bool ok() const { return structure_ok && widths_ok; }
};

// Section 3 main theorem, executed: prime-decompose under the
// (ISK4, wheel)-free filter, classify the base, emit the per-case bound.
BoundReport pipeline_isk4(const Graph& g, int t, Budget budget = {});

// Section 4 main theorem, executed: reduce along proper 1-joins keeping
// the block of maximum rankwidth, prime-decompose by 1-cutsets and proper
// 2-cutsets, classify the base, emit the per-case bound.
BoundReport pipeline_unique_chord(const Graph& g, int t, Budget budget = {});

}  // namespace gdt
