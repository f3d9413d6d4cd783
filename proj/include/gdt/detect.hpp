#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gdt/budget.hpp"
#include "gdt/graph.hpp"

namespace gdt {

struct SubdivisionWitness {
  std::vector<int> branch;              // image of each pattern vertex
  std::vector<std::vector<int>> paths;  // one induced path per pattern edge
  VSet vertices = 0;
};

struct WheelWitness {
  std::vector<int> hole;
  int hub = -1;
  VSet vertices() const { return from_vertex_list(hole) | bit(hub); }
};

struct UniqueChordWitness {
  std::vector<int> cycle;
  std::pair<int, int> chord{-1, -1};
};

template <class W>
struct Detection {
  std::optional<W> witness;
  bool exhaustive = true;
  bool found() const { return witness.has_value(); }
};

// Induced subdivision of `pattern` in g: pattern vertices map injectively
// to branch vertices, pattern edges to internally disjoint induced paths,
// and no edges among witness vertices beyond the paths.  When
// require_full_cover is set only witnesses spanning all of g count (that
// turns the search into "g is itself a subdivision of pattern").
Detection<SubdivisionWitness> find_induced_subdivision(const Graph& g, const Graph& pattern,
                                                       Budget budget = {},
                                                       bool require_full_cover = false);

Detection<SubdivisionWitness> detect_isk4(const Graph& g, Budget budget = {});

// Hole of length >= min_hole_length (default 4) plus an outside vertex
// with >= 3 neighbors on it.
Detection<WheelWitness> detect_wheel(const Graph& g, Budget budget = {},
                                     int min_hole_length = 4);

Detection<UniqueChordWitness> detect_unique_chord_cycle(const Graph& g, Budget budget = {});

// Enumerate chordless cycles of length >= min_len; stop early when the
// callback returns false.  Returns false on budget exhaustion.
bool for_each_hole(const Graph& g, int min_len, Budget& budget,
                   const std::function<bool(const std::vector<int>&)>& cb);

std::optional<VSet> detect_clique(const Graph& g, int t);
std::optional<std::pair<VSet, VSet>> detect_biclique(const Graph& g, int t);

struct CleanlinessReport {
  Tri clean = Tri::kYes;
  std::string violation;  // "clique", "biclique", "wall", "line-of-wall"
  VSet witness = 0;
};

// t-clean: none of K_t, K_{t,t}, an induced subdivision of wall(t), or an
// induced line graph of such a subdivision.
CleanlinessReport is_t_clean(const Graph& g, int t, Budget budget = {});

}  // namespace gdt
