#include <doctest.h>

#include "gdt/detect.hpp"
#include "gdt/generate.hpp"
#include "gdt/reference.hpp"

using namespace gdt;

namespace {

Graph prism() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph subdivided_k4() {
  Graph g = complete_graph(4);
  g = subdivide_edge(g, 0, 1);
  g = subdivide_edge(g, 2, 3);
  return g;
}

}  // namespace

TEST_CASE("induced subdivisions") {
  auto d = find_induced_subdivision(complete_graph(4), complete_graph(4));
  REQUIRE(d.found());
  CHECK(d.witness->vertices == complete_graph(4).vertices());

  d = find_induced_subdivision(subdivided_k4(), complete_graph(4));
  REQUIRE(d.found());
  CHECK(reference::is_subdivision_of_k4(induced_subgraph(subdivided_k4(), d.witness->vertices)));

  CHECK(!find_induced_subdivision(complete_bipartite(3, 3), complete_graph(4)).found());

  // full-cover mode: the graph must itself be a subdivision of the pattern
  CHECK(find_induced_subdivision(subdivided_k4(), complete_graph(4), {}, true).found());
  Graph padded(subdivided_k4().vertex_count() + 1);
  for (auto [u, v] : subdivided_k4().edges()) padded.add_edge(u, v);
  CHECK(!find_induced_subdivision(padded, complete_graph(4), {}, true).found());
}

TEST_CASE("isk4 detector against the subset oracle") {
  std::vector<Graph> samples = {complete_graph(4), subdivided_k4(), prism(),
                                petersen(),        cycle_graph(7),  complete_bipartite(3, 3),
                                wall(2)};
  for (int i = 0; i < 40; ++i) samples.push_back(random_graph(3 + i % 6, 45, 1300 + i));
  for (const Graph& g : samples) {
    auto d = detect_isk4(g);
    REQUIRE(d.exhaustive);
    CHECK(d.found() == reference::isk4_by_subsets(g).has_value());
    if (d.found())
      CHECK(reference::is_subdivision_of_k4(induced_subgraph(g, d.witness->vertices)));
  }
  CHECK(detect_isk4(petersen()).found());  // frozen
  CHECK(!detect_isk4(prism()).found());
}

TEST_CASE("wheel detector") {
  Graph w5(6);
  for (int v = 0; v < 5; ++v) {
    w5.add_edge(v, (v + 1) % 5);
    w5.add_edge(5, v);
  }
  auto d = detect_wheel(w5);
  REQUIRE(d.found());
  CHECK(d.witness->hub == 5);
  CHECK(d.witness->hole.size() == 5);

  CHECK(!detect_wheel(complete_graph(4)).found());  // hole length >= 4 required
  CHECK(!detect_wheel(petersen()).found());         // frozen

  Graph c6v(7);
  for (int v = 0; v < 6; ++v) c6v.add_edge(v, (v + 1) % 6);
  for (int v : {1, 3, 5}) c6v.add_edge(6, v);
  CHECK(detect_wheel(c6v).found());

  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(4 + i % 5, 50, 1400 + i);
    CHECK(detect_wheel(g).found() == reference::wheel_by_subsets(g).has_value());
  }
}

TEST_CASE("unique chord cycle detector") {
  Graph c5c = cycle_graph(5);
  c5c.add_edge(0, 2);
  auto d = detect_unique_chord_cycle(c5c);
  REQUIRE(d.found());
  CHECK(d.witness->cycle.size() >= 4);

  CHECK(!detect_unique_chord_cycle(cycle_graph(6)).found());
  CHECK(!detect_unique_chord_cycle(complete_graph(4)).found());  // every cycle has 0 or 2 chords

  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(4 + i % 5, 50, 1500 + i);
    CHECK(detect_unique_chord_cycle(g).found() ==
          reference::unique_chord_cycle_by_subsets(g).has_value());
  }
}

TEST_CASE("clique and biclique detection") {
  auto k = detect_clique(complete_graph(5), 4);
  REQUIRE(k.has_value());
  CHECK(popcount(*k) == 4);
  CHECK(!detect_clique(petersen(), 3));
  CHECK(detect_clique(petersen(), 2));

  auto b = detect_biclique(complete_bipartite(3, 4), 3);
  REQUIRE(b.has_value());
  CHECK(popcount(b->first) == 3);
  CHECK(popcount(b->second) == 3);
  CHECK((b->first & b->second) == 0);
  CHECK(!detect_biclique(petersen(), 2));   // girth 5, no induced C4
  CHECK(!detect_biclique(cycle_graph(6), 2));
  CHECK(detect_biclique(cycle_graph(4), 2));
}

TEST_CASE("t-cleanliness") {
  auto rep = is_t_clean(cycle_graph(6), 3);
  CHECK(rep.clean == Tri::kYes);

  rep = is_t_clean(complete_graph(5), 4);
  CHECK(rep.clean == Tri::kNo);
  CHECK(rep.violation == "clique");
  CHECK(popcount(rep.witness) == 4);

  rep = is_t_clean(complete_bipartite(4, 5), 4);
  CHECK(rep.clean == Tri::kNo);
  CHECK(rep.violation == "biclique");

  // a wall contains itself as the forbidden subdivision
  rep = is_t_clean(wall(3), 3);
  CHECK(rep.clean == Tri::kNo);
  CHECK(rep.violation == "wall");
  CHECK(rep.witness == wall(3).vertices());

  // too small to contain wall(3) or its line graph
  rep = is_t_clean(wall(2), 3);
  CHECK(rep.clean == Tri::kYes);

  CHECK_THROWS_AS(is_t_clean(Graph(1), 1), InputError);
}

TEST_CASE("hole enumeration") {
  Budget b;
  int count = 0;
  CHECK(for_each_hole(cycle_graph(6), 4, b, [&](const std::vector<int>& hole) {
    ++count;
    CHECK(hole.size() == 6);
    return true;
  }));
  CHECK(count == 1);

  count = 0;
  Budget b2;
  CHECK(for_each_hole(complete_graph(4), 4, b2, [&](const std::vector<int>&) {
    ++count;
    return true;
  }));
  CHECK(count == 0);

  // early stop
  count = 0;
  Budget b3;
  for_each_hole(petersen(), 4, b3, [&](const std::vector<int>&) {
    ++count;
    return false;
  });
  CHECK(count == 1);  // petersen has twelve 5-holes; we stop after one
}
