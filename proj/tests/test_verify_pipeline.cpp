#include <doctest.h>

#include <algorithm>

#include "gdt/generate.hpp"
#include "gdt/pipeline.hpp"
#include "gdt/verify.hpp"

using namespace gdt;

TEST_CASE("ramsey upper bounds") {
  CHECK(ramsey_upper(2).upper == 2);
  CHECK(ramsey_upper(3).upper == 6);  // exact: R(3,3) = 6
  CHECK(ramsey_upper(4).upper == 20);
  CHECK_THROWS_AS(ramsey_upper(1), InputError);
  for (int t = 2; t < 10; ++t) CHECK(ramsey_upper(t).upper < ramsey_upper(t + 1).upper);
}

TEST_CASE("R(3,3) witnesses") {
  // C5 shows R(3,3) > 5: no triangle, and the complement (also C5) has none
  Graph c5 = cycle_graph(5);
  CHECK(!detect_clique(c5, 3));
  CHECK(!detect_clique(complement(c5), 3));
}

TEST_CASE("lemma registry") {
  auto names = lemma_names();
  CHECK(names.size() >= 10);
  CHECK(std::find(names.begin(), names.end(), "subdivision-tw") != names.end());
  CHECK(std::find(names.begin(), names.end(), "one-join-rw") != names.end());
  CHECK_THROWS_AS(verify_lemma("no-such-lemma", 1, 1), InputError);
}

TEST_CASE("lemma suites pass on small trial counts") {
  for (const std::string& name : lemma_names()) {
    auto rep = verify_lemma(name, 8, 12345);
    INFO(name);
    CHECK(rep.ok());
    CHECK(rep.trials == 8);
    CHECK(rep.passes + rep.skipped == 8);
  }
}

TEST_CASE("isk4 pipeline on curated inputs") {
  auto rep = pipeline_isk4(cycle_graph(6), 3);
  CHECK(rep.ok());
  CHECK(isomorphic(rep.base, cycle_graph(5)));
  CHECK(rep.base_label.kind == BasicClass::kSeriesParallel);
  CHECK(rep.concrete_bound == 2);
  CHECK(rep.base_tw == 2);
  CHECK(rep.input_tw == 2);

  rep = pipeline_isk4(complete_bipartite(3, 3), 4);
  CHECK(rep.ok());
  CHECK(rep.base_label.kind == BasicClass::kCompleteBipartite);
  CHECK(rep.concrete_bound == 4);  // bound is t
  CHECK(rep.base_tw == 3);

  // A square with one attachment path is wheel-free; it is also the line
  // graph of a chordless subcubic graph, which the recognizer tests first.
  rep = pipeline_isk4(long_rich_square_graph({4}, 3), 4);
  CHECK(rep.ok());
  CHECK(rep.base_label.kind == BasicClass::kLineOfChordlessSubcubic);
  REQUIRE(rep.concrete_bound.has_value());
  CHECK(rep.base_tw <= *rep.concrete_bound);
}

TEST_CASE("isk4 pipeline rejects out-of-class inputs") {
  CHECK_THROWS_AS(pipeline_isk4(complete_graph(4), 3), InputError);  // K4 is an ISK4
  Graph w5(6);
  for (int v = 0; v < 5; ++v) {
    w5.add_edge(v, (v + 1) % 5);
    w5.add_edge(5, v);
  }
  CHECK_THROWS_AS(pipeline_isk4(w5, 3), InputError);
  CHECK_THROWS_AS(pipeline_isk4(complete_bipartite(3, 3), 3), InputError);  // not 3-clean
  CHECK_THROWS_AS(pipeline_isk4(Graph(2), 3), InputError);  // disconnected
  // squares with two or more attachment paths always contain a wheel
  CHECK_THROWS_AS(pipeline_isk4(long_rich_square_graph({2, 3}, 5), 4), InputError);
}

TEST_CASE("unique-chord pipeline on curated inputs") {
  // C7 has a proper 2-cutset, so decomposition runs and lands on a C5 base
  auto rep = pipeline_unique_chord(cycle_graph(7), 3);
  CHECK(rep.ok());
  CHECK(rep.base_label.kind == BasicClass::kPetersenEmbedded);
  CHECK(rep.concrete_bound == 10);
  CHECK(rep.input_tw == 2);
  CHECK(rep.trace_steps >= 1);

  rep = pipeline_unique_chord(petersen(), 3);
  CHECK(rep.ok());
  CHECK(rep.base == petersen());
  CHECK(rep.concrete_bound == 10);
  CHECK(rep.base_tw == 4);
  CHECK(rep.input_rw == 3);

  rep = pipeline_unique_chord(heawood(), 3);
  CHECK(rep.ok());
  CHECK(rep.base_label.kind == BasicClass::kHeawoodEmbedded);
  CHECK(rep.concrete_bound == 14);
}

TEST_CASE("unique-chord pipeline reduces along 1-joins") {
  Graph star = complete_bipartite(1, 3);
  Graph g = compose_one_join(star, 0, star, 0);  // K33
  auto rep = pipeline_unique_chord(g, 4);
  CHECK(rep.ok());
  CHECK(rep.join_reductions >= 1);
  CHECK(rep.input_rw == rep.reduced_rw);
}

TEST_CASE("unique-chord pipeline rejects out-of-class inputs") {
  Graph c5c = cycle_graph(5);
  c5c.add_edge(0, 2);
  CHECK_THROWS_AS(pipeline_unique_chord(c5c, 3), InputError);
  CHECK_THROWS_AS(pipeline_unique_chord(complete_graph(3), 3), InputError);  // not 3-clean
}
