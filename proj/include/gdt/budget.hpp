#pragma once

#include <cstdint>

namespace gdt {

// Node-count budget shared by the exact searches.  Counting explored
// nodes (not wall clock) keeps tri-state outcomes reproducible.
struct Budget {
  std::uint64_t limit = 50'000'000;
  std::uint64_t used = 0;

  bool tick(std::uint64_t k = 1) {
    used += k;
    return used <= limit;
  }
  bool exhausted() const { return used > limit; }
};

enum class Tri { kYes, kNo, kUnknown };

}  // namespace gdt
