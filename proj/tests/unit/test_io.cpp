#include "doctest.h"
#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/io.hpp"
#include "packdom/orientation.hpp"

using namespace packdom;

TEST_CASE("dimacs parsing") {
  Graph g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 2));

  CHECK_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 x\n"), InvalidInput);
}

TEST_CASE("multigraph dimacs keeps loops and parallel edges") {
  auto m = parse_dimacs_multigraph("p edge 2 3\ne 1 1\ne 1 2\ne 2 1\n");
  CHECK(m.size() == 3);
  CHECK(m.degree(0) == 4);
  CHECK(parse_dimacs_multigraph(format_dimacs(m)) == m);
}

TEST_CASE("graph6 known encodings") {
  CHECK(format_graph6(named("k33")) == "EFz_");
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(parse_graph6(">>graph6<<C~") == k4);
  CHECK(format_graph6(Graph(1)) == "@");
  CHECK_THROWS_AS(parse_graph6("C"), InvalidInput);
}

TEST_CASE("round trips on random graphs") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Graph g = random_connected_bounded_degree(1 + seed % 70, 2 + seed % 3, seed);
    CHECK(parse_dimacs(format_dimacs(g)) == g);
    CHECK(parse_graph6(format_graph6(g)) == g);
    CHECK(parse_graph(format_dimacs(g)) == g);
    CHECK(parse_graph(format_graph6(g) + "\n") == g);
  }
}

TEST_CASE("arc format round trip") {
  auto m = random_multigraph_min2(10, 15, 4);
  auto d = orient_no_sources(m).orientation;
  auto back = parse_arcs(format_arcs(d));
  CHECK(back.arcs() == d.arcs());
}

TEST_CASE("vertex set files") {
  CHECK(parse_vertex_set("c packing\n0 3\n", 4) == VertexSet(4, {0, 3}));
  CHECK(parse_vertex_set("[3, 1]", 4) == VertexSet(4, {1, 3}));
  CHECK(parse_vertex_set(R"({"kind": "idom", "members": [2]})", 4) == VertexSet(4, {2}));
  CHECK(parse_vertex_set("", 4).empty());
  CHECK_THROWS_AS(parse_vertex_set("7", 4), InvalidInput);
  CHECK_THROWS_AS(parse_vertex_set("1 a", 4), InvalidInput);
  CHECK_THROWS_AS(parse_vertex_set("{\"members\": 3}", 4), InvalidInput);
}

TEST_CASE("digests are stable and content sensitive") {
  CHECK(content_digest("abc") == content_digest("abc"));
  CHECK(content_digest("abc") != content_digest("abd"));
  CHECK(content_digest("").size() == 16);
  CHECK(graph_digest(named("petersen")) == graph_digest(parse_graph6(format_graph6(named("petersen")))));
}
