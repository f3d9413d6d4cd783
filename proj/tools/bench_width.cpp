// Benchmark: the subset-DP solvers (OpenMP-parallel where it helps)
// against the serial brute-force references on a fixed instance ladder.

#include <chrono>
#include <cstdio>

#include "gdt/generate.hpp"
#include "gdt/rankwidth.hpp"
#include "gdt/reference.hpp"
#include "gdt/treewidth.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main() {
  std::printf("%-28s %4s | %9s %12s | %9s %12s\n", "instance", "n", "tw(DP)", "tw(ref) ms",
              "rw(DP)", "rw(ref) ms");

  struct Row {
    const char* name;
    gdt::Graph g;
  };
  std::vector<Row> rows;
  rows.push_back({"petersen", gdt::petersen()});
  rows.push_back({"K5", gdt::complete_graph(5)});
  rows.push_back({"K33", gdt::complete_bipartite(3, 3)});
  rows.push_back({"C7", gdt::cycle_graph(7)});
  for (int n = 6; n <= 8; ++n)
    rows.push_back({"random(40%)", gdt::random_connected_graph(n, 40, 1000 + n)});

  for (const Row& row : rows) {
    const gdt::Graph& g = row.g;
    auto t0 = Clock::now();
    int tw = gdt::treewidth_exact(g).width();
    double tw_dp = ms_since(t0);

    t0 = Clock::now();
    int tw_ref = gdt::reference::treewidth_by_elimination_orderings(g);
    double tw_ref_ms = ms_since(t0);

    t0 = Clock::now();
    int rw = gdt::rankwidth_exact(g).width();
    double rw_dp = ms_since(t0);

    double rw_ref_ms = -1;
    int rw_ref = -1;
    if (g.vertex_count() <= 7) {
      t0 = Clock::now();
      rw_ref = gdt::reference::rankwidth_by_tree_enumeration(g);
      rw_ref_ms = ms_since(t0);
    }

    if (tw != tw_ref || (rw_ref >= 0 && rw != rw_ref)) {
      std::printf("MISMATCH on %s: tw %d/%d rw %d/%d\n", row.name, tw, tw_ref, rw, rw_ref);
      return 1;
    }
    std::printf("%-28s %4d | %2d %5.1fms %9.1fms | %2d %5.1fms ", row.name, g.vertex_count(),
                tw, tw_dp, tw_ref_ms, rw, rw_dp);
    if (rw_ref >= 0)
      std::printf("%9.1fms\n", rw_ref_ms);
    else
      std::printf("%12s\n", "(skipped)");
  }

  // One larger treewidth instance to show the DP scaling.
  gdt::Graph big = gdt::random_connected_graph(18, 30, 7);
  auto t0 = Clock::now();
  int tw = gdt::treewidth_exact(big).width();
  std::printf("%-28s %4d | %2d %5.1fms %9s |\n", "random(30%), DP only", big.vertex_count(), tw,
              ms_since(t0), "-");
  return 0;
}
