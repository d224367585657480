#include "doctest.h"

#include <algorithm>

#include "generators.hpp"
#include "graph_enum.hpp"
#include "lec/decomposition.hpp"
#include "lec/error.hpp"
#include "lec/families.hpp"
#include "naive.hpp"

using namespace lec;

TEST_SUITE("decomposition") {

TEST_CASE("bowtie has two blocks and one cut vertex") {
  const Graph bowtie = testing::make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const BlockDecomposition bd = block_decomposition(bowtie);
  CHECK(bd.block_count() == 2);
  CHECK(bd.cut_vertices == std::vector<Vertex>{2});
  for (const Block& b : bd.blocks) CHECK_FALSE(b.trivial());
}

TEST_CASE("path and K4") {
  const BlockDecomposition p = block_decomposition(path_graph(4));
  CHECK(p.block_count() == 3);
  CHECK(p.cut_vertices.size() == 2);
  for (const Block& b : p.blocks) CHECK(b.trivial());
  const BlockDecomposition k = block_decomposition(complete_graph(4));
  CHECK(k.block_count() == 1);
  CHECK(k.cut_vertices.empty());
}

TEST_CASE("bad inputs") {
  CHECK_THROWS(block_decomposition(Graph(1, {})));
  CHECK_THROWS(block_decomposition(testing::make_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("cut-edge graphs") {
  const CutEdgeGraph r2 = cut_edge_graph(r_t_graph(2));
  CHECK(r2.max_degree == 2);
  CHECK(r2.reduced_max_weight == 2);
  const CutEdgeGraph c6 = cut_edge_graph(cycle_graph(6));
  CHECK(c6.empty());
  CHECK_FALSE(c6.reduced_max_weight.has_value());
  const Graph ds = testing::make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
  const CutEdgeGraph c = cut_edge_graph(ds);
  CHECK(c.edges.size() == 5);
  CHECK(c.reduced_max_weight == 5);
}

TEST_CASE("block invariants over small graphs") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const BlockDecomposition bd = block_decomposition(g);
      std::vector<int> owner(g.size(), -1);
      for (int b = 0; b < bd.block_count(); ++b) {
        for (EdgeId e : bd.blocks[b].edges) {
          CHECK(owner[e] == -1);
          owner[e] = b;
        }
      }
      CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
      // bc-tree is a tree
      int tree_edges = 0;
      for (const auto& adj : bd.bc_tree) tree_edges += static_cast<int>(adj.size());
      CHECK(tree_edges / 2 == static_cast<int>(bd.bc_tree.size()) - 1);
      // cut edges are exactly the edges whose removal disconnects
      const CutEdgeGraph cut = cut_edge_graph(g, bd);
      for (EdgeId e = 0; e < g.size(); ++e) {
        std::vector<Edge> rest;
        for (EdgeId f = 0; f < g.size(); ++f) {
          if (f != e) rest.push_back(g.edge(f));
        }
        const bool bridge = !is_connected(Graph(g.order(), rest));
        CHECK(bridge == std::binary_search(cut.edges.begin(), cut.edges.end(), e));
        CHECK(bridge == bd.blocks[bd.block_of_edge[e]].trivial());
      }
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(bd.is_cut_vertex(v) ==
              std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v));
      }
      CHECK(is_two_connected(g) == (bd.block_count() == 1 && n >= 3));
    }
  }
}

TEST_CASE("circumference examples") {
  CHECK(circumference(path_graph(6)).length == 0);
  CHECK(circumference(star_graph(4)).length == 0);
  CHECK(circumference(complete_graph(4)).length == 4);
  const Circumference p = circumference(petersen_graph());
  CHECK(p.length == 9);
  REQUIRE(p.cycle.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(petersen_graph().adjacent(p.cycle[i], p.cycle[(i + 1) % 9]));
}

TEST_CASE("circumference matches cycle enumeration") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      CHECK(circumference(g).length == testing::naive_circumference(g));
    }
  }
}

TEST_CASE("circumference budget is a hard error") {
  CHECK_THROWS_AS(circumference(petersen_graph(), 10), BudgetExceeded);
}

}
