#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdt/graph.hpp"

namespace gdt {

// Deterministic generator RNG (splitmix64); identical seeds give
// byte-identical graphs on every platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  // True with probability percent/100.
  bool chance(int percent) { return (int)below(100) < percent; }
};

// Random simple graph, each edge present with probability percent/100.
Graph random_graph(int n, int edge_percent, std::uint64_t seed);
Graph random_connected_graph(int n, int edge_percent, std::uint64_t seed);
Graph random_two_connected_graph(int n, int edge_percent, std::uint64_t seed);

// Subdivide `count` randomly chosen edges (fresh edges may be re-picked).
Graph subdivide_random_edges(const Graph& g, int count, std::uint64_t seed);

// Identify a k-clique of g1 with a k-clique of g2 (first cliques in
// deterministic order).  Throws when either side has no k-clique.
Graph glue_on_clique(const Graph& g1, const Graph& g2, int k);

// Identify vertices {u1, v1} of g1 with {u2, v2} of g2; the pair becomes
// a 2-cutset of the result.
Graph glue_on_pair(const Graph& g1, int u1, int v1, const Graph& g2, int u2, int v2);

// 1-join composition: gx with marker vertex b, gy with marker vertex a;
// the result joins N(b) complete to N(a) and drops both markers.
Graph compose_one_join(const Graph& gx, int b, const Graph& gy, int a);

// Square u1-u2-u3-u4 plus one attachment path per entry of path_lengths
// (entry = number of path vertices, >= 2).  Each path's ends are pinned to
// a pair of opposite square edges chosen by the seed.
Graph long_rich_square_graph(const std::vector<int>& path_lengths, std::uint64_t seed);

// Subdivide every edge of a random graph with minimum degree >= 3.
Graph strongly_2bipartite_graph(int base_n, std::uint64_t seed);

// Random member of a hereditary class built from a cycle by repeatedly
// attaching paths between existing vertices (rejection-checked by the
// caller when needed).
Graph theta_chain(int rounds, std::uint64_t seed, bool avoid_adjacent_attach);

struct GeneratorSpec {
  std::string family;  // petersen heawood wall random cycle path clique
                       // biclique line-of-wall long-rich-square
                       // strongly-2-bipartite theta-chain
  int n = 0, m = 0, t = 2, percent = 50;
  std::uint64_t seed = 1;
  std::vector<int> lengths;
};

Graph generate(const GeneratorSpec& spec);

}  // namespace gdt
