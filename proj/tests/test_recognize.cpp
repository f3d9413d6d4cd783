#include <doctest.h>

#include "gdt/generate.hpp"
#include "gdt/recognize.hpp"

using namespace gdt;

namespace {

Graph subdivided_k4() {
  Graph g = complete_graph(4);
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
    g = subdivide_edge(g, u, v);
  return g;
}

}  // namespace

TEST_CASE("line graph roots") {
  auto r = line_graph_root(cycle_graph(6));
  REQUIRE(r.has_value());
  CHECK(isomorphic(*r, cycle_graph(6)));  // L(Cn) = Cn

  r = line_graph_root(complete_graph(3));  // K3 = L(K3) = L(claw)
  CHECK(r.has_value());

  CHECK(!line_graph_root(complete_bipartite(1, 3)));  // the claw is not a line graph

  Graph lw = line_graph(wall(2));
  r = line_graph_root(lw);
  REQUIRE(r.has_value());
  CHECK(isomorphic(line_graph(*r), lw));

  r = line_graph_root(path_graph(3));
  REQUIRE(r.has_value());
  CHECK(isomorphic(*r, path_graph(4)));

  Graph lk4 = line_graph(complete_graph(4));
  CHECK(lk4.vertex_count() == 6);
  CHECK(lk4.edge_count() == 12);
  CHECK(line_graph_root(lk4).has_value());
}

TEST_CASE("chordless subcubic roots") {
  auto r = recognize_line_of_chordless_subcubic(cycle_graph(6));
  REQUIRE(r.has_value());
  CHECK(is_chordless_graph(*r));
  CHECK(r->max_degree() <= 3);
  // wall(2) is subcubic but its outer cycle has chords, so L(wall(2)) fails
  CHECK(!recognize_line_of_chordless_subcubic(line_graph(wall(2))));
}

TEST_CASE("chordless graphs") {
  CHECK(is_chordless_graph(cycle_graph(7)));
  // Petersen has 9-cycles; 12 edges live on any 9 of its vertices, so
  // three of them are chords.
  CHECK(!is_chordless_graph(petersen()));
  CHECK(!is_chordless_graph(wall(2)));
  CHECK(!is_chordless_graph(complete_graph(4)));
  CHECK(is_chordless_graph(subdivided_k4()));
}

TEST_CASE("series parallel") {
  CHECK(is_series_parallel(cycle_graph(6)));
  CHECK(is_series_parallel(path_graph(5)));
  CHECK(!is_series_parallel(complete_graph(4)));
  CHECK(!is_series_parallel(petersen()));
  Graph two_blocks = glue_on_clique(cycle_graph(4), complete_graph(3), 1);
  CHECK(is_series_parallel(two_blocks));
}

TEST_CASE("complete bipartite recognition") {
  VSet x = 0, y = 0;
  CHECK(is_complete_bipartite_graph(complete_bipartite(3, 4), &x, &y));
  CHECK(popcount(x) + popcount(y) == 7);
  CHECK(std::min(popcount(x), popcount(y)) == 3);
  CHECK(is_complete_bipartite_graph(complete_bipartite(1, 5)));
  CHECK(!is_complete_bipartite_graph(cycle_graph(6)));
  CHECK(!is_complete_bipartite_graph(complete_graph(3)));
}

TEST_CASE("long rich squares") {
  Graph g = long_rich_square_graph({2, 3}, 5);
  auto center = long_rich_square_center(g);
  REQUIRE(center.has_value());
  CHECK(popcount(*center) == 4);
  CHECK(isomorphic(induced_subgraph(g, *center), cycle_graph(4)));
  CHECK(!long_rich_square_center(cycle_graph(6)));
  // C4 is vacuously a long rich square: no components outside the hole
  CHECK(long_rich_square_center(cycle_graph(4)).has_value());
}

TEST_CASE("strongly 2-bipartite partitions") {
  auto p = strongly_2bipartite_partition(subdivided_k4());
  REQUIRE(p.has_value());
  // X = the six subdivision vertices (degree 2), Y = the four branch vertices
  CHECK(popcount(p->first) == 6);
  CHECK(popcount(p->second) == 4);
  CHECK(!strongly_2bipartite_partition(cycle_graph(6)));      // no degree >= 3 side
  CHECK(!strongly_2bipartite_partition(complete_bipartite(2, 3)));  // has a C4
}

TEST_CASE("fixed host embeddings") {
  auto e = embeds_in_fixed_host(cycle_graph(5), FixedHost::kPetersen);
  REQUIRE(e.has_value());
  CHECK(e->size() == 5);
  CHECK(!embeds_in_fixed_host(complete_graph(3), FixedHost::kPetersen));  // girth 5
  CHECK(embeds_in_fixed_host(cycle_graph(6), FixedHost::kHeawood).has_value());
  CHECK(embeds_in_fixed_host(petersen(), FixedHost::kPetersen).has_value());
  CHECK(!embeds_in_fixed_host(cycle_graph(4), FixedHost::kHeawood));  // girth 6
}

TEST_CASE("basic class labels, isk4-wheel-free theorem") {
  CHECK(recognize_basic_isk4(cycle_graph(6)).kind == BasicClass::kSeriesParallel);
  CHECK(recognize_basic_isk4(complete_bipartite(3, 3)).kind == BasicClass::kCompleteBipartite);
  auto lrs = recognize_basic_isk4(long_rich_square_graph({2, 3}, 5));
  CHECK(lrs.kind == BasicClass::kLongRichSquare);
  CHECK(popcount(lrs.central_square) == 4);
  CHECK(recognize_basic_isk4(line_graph(subdivided_k4())).kind ==
        BasicClass::kLineOfChordlessSubcubic);
  CHECK(recognize_basic_isk4(complete_graph(4)).kind == BasicClass::kNone);
}

TEST_CASE("basic class labels, unique-chord-free theorem") {
  CHECK(recognize_basic_unique_chord(cycle_graph(7)).kind == BasicClass::kHoleAtLeast7);
  CHECK(recognize_basic_unique_chord(subdivided_k4()).kind ==
        BasicClass::kStronglyTwoBipartite);
  auto pet = recognize_basic_unique_chord(petersen());
  CHECK(pet.kind == BasicClass::kPetersenEmbedded);
  CHECK(pet.embedding.size() == 10);
  CHECK(recognize_basic_unique_chord(cycle_graph(5)).kind == BasicClass::kPetersenEmbedded);
  CHECK(recognize_basic_unique_chord(heawood()).kind == BasicClass::kHeawoodEmbedded);
  CHECK(recognize_basic_unique_chord(complete_graph(5)).kind == BasicClass::kClique);
  CHECK(recognize_basic_unique_chord(complete_graph(1)).kind == BasicClass::kClique);
  Graph c5c = cycle_graph(5);
  c5c.add_edge(0, 2);
  CHECK(recognize_basic_unique_chord(c5c).kind == BasicClass::kNone);
}

TEST_CASE("class membership") {
  CHECK(in_class(cycle_graph(6), GraphClass::kAllGraphs) == Tri::kYes);
  CHECK(in_class(complete_graph(4), GraphClass::kIsk4WheelFree) == Tri::kNo);
  CHECK(in_class(petersen(), GraphClass::kIsk4WheelFree) == Tri::kNo);  // has an ISK4
  CHECK(in_class(cycle_graph(6), GraphClass::kIsk4WheelFree) == Tri::kYes);
  Graph c5c = cycle_graph(5);
  c5c.add_edge(0, 2);
  CHECK(in_class(c5c, GraphClass::kUniqueChordFree) == Tri::kNo);
  CHECK(in_class(petersen(), GraphClass::kUniqueChordFree) == Tri::kYes);
}
