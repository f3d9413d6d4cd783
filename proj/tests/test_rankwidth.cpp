#include <doctest.h>

#include "gdt/generate.hpp"
#include "gdt/rankwidth.hpp"
#include "gdt/reference.hpp"

using namespace gdt;

TEST_CASE("cut rank") {
  CHECK(cut_rank(complete_graph(4), 0b0011) == 1);  // all-ones cross matrix
  CHECK(cut_rank(Graph(5), 0b00110) == 0);
  CHECK(cut_rank(cycle_graph(5), bit(0) | bit(1)) == 2);
  // symmetry
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(7, 50, 40 + i);
    for (VSet s = 0; s < (VSet{1} << 7); s += 5)
      CHECK(cut_rank(g, s) == cut_rank(g, g.vertices() & ~s));
  }
  // submodularity: f(A) + f(B) >= f(A|B) + f(A&B)
  Graph g = random_graph(8, 45, 77);
  for (VSet a = 0; a < 256; a += 3)
    for (VSet b = 0; b < 256; b += 7)
      CHECK(cut_rank(g, a) + cut_rank(g, b) >= cut_rank(g, a | b) + cut_rank(g, a & b));
}

TEST_CASE("rankwidth of named graphs") {
  CHECK(rankwidth_exact(complete_graph(4)).width() == 1);
  CHECK(rankwidth_exact(Graph(3)).width() == 0);
  CHECK(rankwidth_exact(cycle_graph(5)).width() == 2);
  CHECK(rankwidth_exact(complete_bipartite(3, 3)).width() == 1);
  CHECK(rankwidth_exact(Graph(1)).width() == 0);
  CHECK(rankwidth_exact(petersen()).width() == 3);  // frozen from the first exact run
}

TEST_CASE("agreement with the tree-enumeration oracle") {
  CHECK(rankwidth_exact(complete_graph(4)).width() ==
        reference::rankwidth_by_tree_enumeration(complete_graph(4)));
  CHECK(rankwidth_exact(cycle_graph(5)).width() ==
        reference::rankwidth_by_tree_enumeration(cycle_graph(5)));
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(4 + i % 4, 50, 600 + i);
    CHECK(rankwidth_exact(g).width() == reference::rankwidth_by_tree_enumeration(g));
  }
}

TEST_CASE("witness decompositions recompute to the reported width") {
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(5 + i % 5, 45, 700 + i);
    auto r = rankwidth_exact(g);
    REQUIRE(r.exact);
    if (g.vertex_count() < 2) continue;
    REQUIRE(r.witness.has_value());
    CHECK(rank_decomposition_width(g, *r.witness) == r.width());
    // leaves biject to vertices; internal nodes have degree 3
    const RankDecomposition& rd = *r.witness;
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(rd.tree.degree(rd.leaf_of_vertex[v]) == 1);
  }
}

TEST_CASE("caterpillar fallback under budget exhaustion") {
  Graph g = random_graph(20, 40, 3);
  Budget tiny;
  tiny.limit = 100;
  auto r = rankwidth_exact(g, tiny);
  CHECK(!r.exact);
  CHECK(r.lower <= r.upper);
  REQUIRE(r.witness.has_value());
  CHECK(rank_decomposition_width(g, *r.witness) == r.upper);
}
