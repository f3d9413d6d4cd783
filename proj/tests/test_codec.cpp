#include <doctest.h>

#include "gdt/codec.hpp"
#include "gdt/generate.hpp"

using namespace gdt;

TEST_CASE("graph6 known encodings") {
  CHECK(graph6_write(complete_graph(5)) == "D~{");  // published example value
  CHECK(graph6_write(Graph(0)) == "?");
  CHECK(graph6_write(Graph(1)) == "@");
  CHECK(graph6_write(cycle_graph(5)) == "Dhc");
  CHECK(isomorphic(graph6_read("D~{"), complete_graph(5)));
  CHECK(graph6_read(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 round trip, exhaustive n <= 5") {
  for (int n = 0; n <= 5; ++n) {
    int pairs = n * (n - 1) / 2;
    for (VSet mask = 0; mask < (VSet{1} << pairs); ++mask) {
      Graph g(n);
      int k = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
          if (contains(mask, k)) g.add_edge(u, v);
      CHECK(graph6_read(graph6_write(g)) == g);
      CHECK(edge_list_read(edge_list_write(g)) == g);
    }
  }
}

TEST_CASE("graph6 round trip, random larger") {
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(5 + i % 40, 37, 100 + i);
    CHECK(graph6_read(graph6_write(g)) == g);
  }
}

TEST_CASE("graph6 rejects bad input") {
  CHECK_THROWS_AS(graph6_read(""), ParseError);
  CHECK_THROWS_AS(graph6_read("~??"), ParseError);  // multi-byte size unsupported
  CHECK_THROWS_AS(graph6_read("D"), ParseError);    // truncated
  CHECK_THROWS_AS(graph6_read("D~{X"), ParseError); // trailing junk
  CHECK_THROWS_AS(graph6_read("D\x01\x01"), ParseError);
}

TEST_CASE("edge list") {
  Graph p3 = edge_list_read("0 1\n1 2");
  CHECK(p3 == path_graph(3));
  // header form: n m then m pairs
  Graph h = edge_list_read("4 2\n0 1\n2 3");
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 2);
  CHECK_THROWS_AS(edge_list_read("1 1"), ParseError);   // self loop
  CHECK_THROWS_AS(edge_list_read("0 1 2"), ParseError); // odd token count
  CHECK_THROWS_AS(edge_list_read("a b"), ParseError);
  CHECK(edge_list_read("").vertex_count() == 0);
}

TEST_CASE("format dispatch") {
  Graph c5 = cycle_graph(5);
  CHECK(codec_read(Format::kGraph6, codec_write(Format::kGraph6, c5)) == c5);
  CHECK(codec_read(Format::kEdgeList, codec_write(Format::kEdgeList, c5)) == c5);
  CHECK(codec_read_auto("0 1\n1 2") == path_graph(3));
  CHECK(codec_read_auto("Dhc") == c5);
}
