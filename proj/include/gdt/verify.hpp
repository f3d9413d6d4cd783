#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdt/budget.hpp"

namespace gdt {

struct RamseyBound {
  int t = 0;
  std::uint64_t upper = 0;  // central binomial bound C(2t-2, t-1)
};

// Upper bound for the Ramsey number R(t, t); exact for t <= 3.
RamseyBound ramsey_upper(int t);

struct TrialFailure {
  std::uint64_t seed = 0;
  std::string detail;
};

struct LemmaReport {
  std::string name;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int skipped = 0;  // budget ran out or no suitable instance was found
  std::vector<TrialFailure> failing;
  bool ok() const { return failures == 0; }
};

// Registered lemma suites, in registry order.
std::vector<std::string> lemma_names();

// Run `trials` randomized checks of the named lemma; each trial's seed
// derives deterministically from (seed, trial index) and trials may run
// concurrently.  Throws InputError for unknown names.
LemmaReport verify_lemma(const std::string& name, int trials, std::uint64_t seed,
                         Budget budget = {});

}  // namespace gdt
