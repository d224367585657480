#include "doctest.h"

#include <numeric>

#include "generators.hpp"
#include "graph_enum.hpp"
#include "lec/error.hpp"
#include "lec/families.hpp"
#include "lec/graph.hpp"
#include "lec/graph_io.hpp"

using namespace lec;

TEST_SUITE("graph") {

TEST_CASE("edge list parses into a path") {
  const Graph g = load_graph("0 1\n1 2", GraphFormat::kEdgeList);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(diameter(g) == 2);
}

TEST_CASE("comments, blank lines and labels") {
  const Graph g = load_graph("# a triangle\n\nb a\n\na c\nc b\n", GraphFormat::kEdgeList);
  CHECK(g.order() == 3);
  CHECK(g.label(0) == "b");
  CHECK(g.label(1) == "a");
  CHECK(is_complete(g));
}

TEST_CASE("graph6 Bw is the triangle") {
  const Graph g = load_graph("Bw", GraphFormat::kGraph6);
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(to_graph6(g) == "Bw\n");
}

TEST_CASE("duplicate edges and loops are rejected") {
  CHECK_THROWS_AS(load_graph("0 1\n0 1", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(load_graph("0 1\n1 0", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(load_graph("2 2", GraphFormat::kEdgeList), ParseError);
  try {
    load_graph("0 1\n1 2\n0 1\n", GraphFormat::kEdgeList);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("malformed input reports a position") {
  CHECK_THROWS_AS(load_graph("0 1 2\n", GraphFormat::kEdgeList), ParseError);
  CHECK_THROWS_AS(load_graph("B", GraphFormat::kGraph6), ParseError);
  CHECK_THROWS_AS(load_graph("B~", GraphFormat::kGraph6), ParseError);
}

TEST_CASE("round trips are byte exact") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const std::string g6 = to_graph6(g);
      CHECK(to_graph6(load_graph(g6, GraphFormat::kGraph6)) == g6);
      const std::string el = to_edge_list(g);
      CHECK(to_edge_list(load_graph(el, GraphFormat::kEdgeList)) == el);
    }
  }
  const std::string text = "x y\ny z\n# kept out\nz w\n";
  CHECK(to_edge_list(load_graph(text, GraphFormat::kEdgeList)) == "x y\ny z\nz w\n");
}

TEST_CASE("diameters") {
  CHECK(diameter(complete_graph(3)) == 1);
  CHECK(diameter(path_graph(4)) == 3);
  CHECK(diameter(petersen_graph()) == 2);
  CHECK_FALSE(diameter(testing::make_graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("edge weights") {
  const EdgeWeightStats star = reduced_max_weight(star_graph(3));
  CHECK(star.reduced_max_weight == 3);
  for (int w : star.weight) CHECK(w == 4);

  const EdgeWeightStats p4 = reduced_max_weight(path_graph(4));
  CHECK(p4.weight == std::vector<int>{3, 4, 3});
  CHECK(p4.reduced_max_weight == 3);

  // double star: centres of degree 3 joined, centre edge weighs 6
  const Graph ds = testing::make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  CHECK(reduced_max_weight(ds).reduced_max_weight == 5);
  CHECK_THROWS(reduced_max_weight(Graph(3, {})));
}

TEST_CASE("basic families") {
  const BasicFamily k5 = recognize_basic_family(complete_graph(5));
  CHECK(k5.kind == BasicFamily::Kind::kComplete);
  CHECK(k5.r == 5);
  const BasicFamily c4 = recognize_basic_family(cycle_graph(4));
  CHECK(c4.kind == BasicFamily::Kind::kCompleteBipartite);
  CHECK(c4.r == 2);
  CHECK(c4.s == 2);
  CHECK(recognize_basic_family(cycle_graph(5)).kind == BasicFamily::Kind::kNone);
  const BasicFamily k23 = recognize_basic_family(complete_bipartite_graph(2, 3));
  CHECK(k23.r == 3);
  CHECK(k23.s == 2);
  CHECK(recognize_basic_family(path_graph(5)).kind == BasicFamily::Kind::kTree);
  CHECK_THROWS(recognize_basic_family(testing::make_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("spanning two-colourable bipartite subgraphs") {
  // K_{2,3} plus an edge inside the larger side still spans K_{3,2}
  Graph g = testing::make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
  const auto sides = find_spanning_two_colourable_bipartite(g);
  REQUIRE(sides.has_value());
  CHECK(sides->first.size() == 3);
  CHECK(sides->second.size() == 2);
  CHECK_FALSE(find_spanning_two_colourable_bipartite(cycle_graph(5)).has_value());
}

TEST_CASE("degree sum, diameter one and weight bound over small graphs") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      int sum = 0;
      for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
      CHECK(sum == 2 * g.size());
      CHECK((diameter(g) == 1) == (recognize_basic_family(g).kind == BasicFamily::Kind::kComplete));
      CHECK(reduced_max_weight(g).reduced_max_weight >= g.max_degree());
    }
  }
}

TEST_CASE("relabelling keeps edge ids and moves labels") {
  const Graph g = path_graph(3);
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph h = g.relabelled(perm);
  CHECK(h.size() == g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    CHECK(h.edge(e).u == perm[g.edge(e).u]);
    CHECK(h.label(perm[0]) == g.label(0));
  }
}

}
