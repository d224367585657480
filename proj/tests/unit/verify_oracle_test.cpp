#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "graph_enum.hpp"
#include "lec/error.hpp"
#include "lec/families.hpp"
#include "lec/oracle.hpp"
#include "lec/verify.hpp"
#include "naive.hpp"

using namespace lec;

TEST_SUITE("verify-oracle") {

TEST_CASE("loose words") {
  CHECK(is_loose_word(std::vector<int>{4}));
  CHECK(is_loose_word(std::vector<int>{1, 2}));
  CHECK_FALSE(is_loose_word(std::vector<int>{2, 2}));
  CHECK_FALSE(is_loose_word(std::vector<int>{1, 2, 1, 2}));
  CHECK(is_loose_word(std::vector<int>{1, 2, 1, 3}));
}

TEST_CASE("pair witnesses") {
  const Graph c5 = cycle_graph(5);  // edges i, i+1
  const EdgeColouring alt({1, 2, 1, 2, 1});
  // 0 and 2: the 2-path through 1 is 1,2 but through 4,3 it is 1,2,1
  CHECK(is_loose_pair(c5, alt, 0, 2).has_value());
  // 1 and 4: 1-0-4 carries 1,1 and the other way 2,1,2
  CHECK_FALSE(is_loose_pair(c5, alt, 1, 4).has_value());

  const auto edge = is_loose_pair(c5, alt, 0, 1);
  REQUIRE(edge.has_value());
  CHECK(edge->kind == PathKind::kEdge);

  const Graph p4 = path_graph(4);
  const auto w = is_loose_pair(p4, EdgeColouring({1, 2, 3}), 0, 3);
  REQUIRE(w.has_value());
  CHECK(w->kind == PathKind::kLoose);
  CHECK(w->path == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(w->colours == std::vector<int>{1, 2, 3});

  CHECK_THROWS(is_loose_pair(p4, EdgeColouring({1, 2}), 0, 3));
}

TEST_CASE("whole-graph verification") {
  CHECK(verify_loose_connected(complete_graph(3), EdgeColouring({1, 1, 1})).accepted);
  CHECK(verify_loose_connected(cycle_graph(4), EdgeColouring({1, 2, 1, 2})).accepted);
  const Verification v = verify_loose_connected(cycle_graph(5), EdgeColouring({1, 2, 1, 2, 1}));
  CHECK_FALSE(v.accepted);
  REQUIRE(v.failing_pair.has_value());
  CHECK(*v.failing_pair == std::pair<Vertex, Vertex>{1, 4});
  CHECK_THROWS(verify_loose_connected(testing::make_graph(4, {{0, 1}, {2, 3}}), EdgeColouring({1, 1})));
}

TEST_CASE("pruned pair search matches path enumeration") {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      std::vector<int> colours(g.size());
      for (int& c : colours) c = std::uniform_int_distribution<int>(1, 3)(rng);
      const EdgeColouring c(colours);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const auto w = is_loose_pair(g, c, u, v);
          CHECK(w.has_value() == testing::naive_loose_pair(g, colours, u, v));
          if (w) {
            // the witness is a real path with the reported colours
            CHECK(w->path.front() == u);
            CHECK(w->path.back() == v);
            for (std::size_t i = 0; i + 1 < w->path.size(); ++i) {
              const auto e = g.edge_between(w->path[i], w->path[i + 1]);
              REQUIRE(e.has_value());
              CHECK(colours[*e] == w->colours[i]);
            }
            CHECK(is_loose_word(w->colours));
          }
        }
      }
    }
  }
}

TEST_CASE("oracle examples") {
  CHECK(oracle_min_colours(complete_graph(3)).lec == 1);
  const OracleResult c4 = oracle_min_colours(cycle_graph(4));
  CHECK(c4.lec == 2);
  CHECK(verify_loose_connected(cycle_graph(4), c4.colouring).accepted);
  CHECK(oracle_min_colours(star_graph(3)).lec == 3);
  CHECK_THROWS_AS(oracle_min_colours(complete_graph(6), {.max_edges = 14}), Error);
  CHECK_THROWS_AS(oracle_min_colours(r_t_graph(3), {.max_edges = 14, .budget = 50}), BudgetExceeded);
}

TEST_CASE("oracle matches unpruned search up to eight edges") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      if (g.size() > 8) continue;
      CHECK(oracle_min_colours(g).lec == testing::naive_lec(g));
    }
  }
}

TEST_CASE("oracle is stable under relabelling and worker count") {
  std::mt19937_64 rng(8);
  for (const Graph& g : testing::connected_graphs(6)) {
    if (g.size() < 8) continue;
    const OracleResult one = oracle_min_colours(g, {.max_edges = 15});
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(oracle_min_colours(g.relabelled(perm), {.max_edges = 15}).lec == one.lec);
    const OracleResult four = oracle_min_colours(g, {.max_edges = 15, .workers = 4});
    CHECK(four.lec == one.lec);
    CHECK(four.colouring == one.colouring);
  }
}

TEST_CASE("oracle structural facts") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const int value = oracle_min_colours(g, {.max_edges = 15}).lec;
      CHECK((value == 1) == is_complete(g));
      if (*diameter(g) >= 3) CHECK(value >= 3);
    }
  }
}

TEST_CASE("adding edges never raises the oracle value") {
  for (const Graph& g : testing::connected_graphs(5)) {
    const int value = oracle_min_colours(g).lec;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        edges.push_back({u, v});
        CHECK(oracle_min_colours(Graph(g.order(), edges)).lec <= value);
      }
    }
  }
}

TEST_CASE("two-colour decisions") {
  const Lec2Decision c4 = decide_lec2(cycle_graph(4));
  CHECK(c4.outcome == Lec2Decision::Outcome::kYes);
  REQUIRE(c4.colouring.has_value());
  CHECK(verify_loose_connected(cycle_graph(4), *c4.colouring).accepted);
  CHECK(decide_lec2(complete_bipartite_graph(5, 2)).outcome == Lec2Decision::Outcome::kNo);
  const Lec2Decision p4 = decide_lec2(path_graph(4));
  CHECK(p4.outcome == Lec2Decision::Outcome::kNo);
  CHECK(p4.states == 0);
  CHECK(decide_lec2(petersen_graph(), 5).outcome == Lec2Decision::Outcome::kBudgetExceeded);
  CHECK_THROWS(decide_lec2(complete_graph(4)));
}

}
