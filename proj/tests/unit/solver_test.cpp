#include "doctest.h"

#include <numeric>
#include <random>

#include "generators.hpp"
#include "graph_enum.hpp"
#include "lec/families.hpp"
#include "lec/oracle.hpp"
#include "lec/solver.hpp"
#include "lec/verify.hpp"

using namespace lec;

namespace {

void check_self_consistent(const Graph& g, const LecCertificate& c) {
  CHECK(verify_loose_connected(g, c.colouring).accepted);
  CHECK(c.colouring.k() == c.hi);
  CHECK(c.lo <= c.hi);
  if (c.value) {
    CHECK(c.lo == *c.value);
    CHECK(c.hi == *c.value);
  }
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("dispatcher examples") {
  const LecCertificate k4 = lec::lec(complete_graph(4));
  CHECK(k4.value == 1);
  CHECK(k4.reason == "complete");
  CHECK(lec::lec(complete_graph(2)).value == 1);
  CHECK(lec::lec(star_graph(5)).value == 5);

  const LecCertificate r3 = lec::lec(r_t_graph(3));
  CHECK(r3.value == 4);
  CHECK(r3.reason == "typed-exception(3)");

  const Graph c4_leaves = decorated_core_graph(CoreFamily::kQ, {}, {2, 2, 2, 0});
  const LecCertificate q = lec::lec(c4_leaves);
  CHECK(q.value == 4);
  CHECK(q.reason == "typed-exception(i)");

  const Graph dumbbell = testing::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(lec::lec(dumbbell).value == 3);

  CHECK_THROWS(lec::lec(Graph(1, {})));
  CHECK_THROWS(lec::lec(testing::make_graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("C4 triple survives a pendant 2-path") {
  // C4 0-1-3-2, two leaves at 0 and 2, a leaf and a 2-path at 1, one leaf at 3.
  // The 2-path puts rw(C) at 3 while Delta(C) stays 2.
  const Graph g = testing::make_graph(
      12, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 6}, {6, 9}, {1, 11}, {2, 7}, {2, 8}, {3, 10}});
  REQUIRE(exceptional_case(g).has_value());
  CHECK(*exceptional_case(g) == ExceptionTag::kC4Triple);
  const LecCertificate c = lec::lec(g);
  CHECK(c.value == 4);
  CHECK(oracle_min_colours(g).lec == 4);
  check_self_consistent(g, c);
}

TEST_CASE("complete bipartite trichotomy") {
  for (int r = 1; r <= 5; ++r) {
    for (int s = 1; s <= r; ++s) {
      const LecCertificate c = lec::lec(complete_bipartite_graph(r, s));
      const int expected = s == 1 ? r : (r <= (1 << s) ? 2 : 3);
      CHECK(c.value == expected);
      check_self_consistent(complete_bipartite_graph(r, s), c);
    }
  }
  CHECK(lec::lec(complete_bipartite_graph(5, 2)).reason == "bipartite-pigeonhole");
}

TEST_CASE("exceptional cases") {
  CHECK(exceptional_case(r_t_graph(4)) == ExceptionTag::kC3DegreeSum);
  const Graph c5 = decorated_core_graph(CoreFamily::kP, {}, {3, 0, 3, 0, 0});
  CHECK(exceptional_case(c5) == ExceptionTag::kC5Pair);
  CHECK_FALSE(exceptional_case(leafy_cycle_graph(6, 3)).has_value());
  CHECK(diameter_three_value(leafy_cycle_graph(6, 3)) == 3);
  CHECK(exceptional_case(decorated_core_graph(CoreFamily::kQ, {}, {3, 0, 0, 0})) == ExceptionTag::kC4Single);
  CHECK(exceptional_case(decorated_core_graph(CoreFamily::kQ, {{0, 2}}, {3, 0, 3, 0})) == ExceptionTag::kDiamond);
  CHECK_THROWS(exceptional_case(complete_bipartite_graph(3, 3)));
  CHECK(std::string(exception_name(ExceptionTag::kDiamond)) == "diamond");
}

TEST_CASE("bounds") {
  const LecBounds p = lec_bounds(petersen_graph());
  CHECK(p.lo == 2);
  CHECK(p.hi == 3);
  const LecBounds star = lec_bounds(star_graph(6));
  CHECK(star.lo == 6);
  CHECK(star.hi == 6);
  const LecBounds path = lec_bounds(path_graph(5));
  CHECK(path.lo == 3);
  CHECK(path.hi == 3);
}

TEST_CASE("dispatcher equals exhaustive search up to six vertices") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const LecCertificate c = lec::lec(g);
      const int o = oracle_min_colours(g, {.max_edges = 20}).lec;
      if (c.value) {
        CHECK(*c.value == o);
      } else {
        CHECK(c.lo <= o);
        CHECK(o <= c.hi);
      }
      check_self_consistent(g, c);
      const LecBounds b = lec_bounds(g);
      CHECK(b.lo <= o);
      CHECK(o <= b.hi);
    }
  }
}

TEST_CASE("large diameter-two graphs come back as bounds") {
  const LecCertificate c = lec::lec(petersen_graph());
  CHECK_FALSE(c.value.has_value());
  CHECK(c.lo == 2);
  CHECK(c.hi == 3);
  check_self_consistent(petersen_graph(), c);
}

TEST_CASE("values do not depend on vertex names") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 80; ++i) {
    const Graph g = testing::random_block_tree(rng, 16);
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LecCertificate a = lec::lec(g);
    const LecCertificate b = lec::lec(g.relabelled(perm));
    CHECK(a.value == b.value);
    CHECK(a.lo == b.lo);
    CHECK(a.hi == b.hi);
  }
}

TEST_CASE("exceptions match exhaustive search on decorated blocks") {
  std::mt19937_64 rng(12);
  int done = 0;
  for (int i = 0; i < 2000 && done < 60; ++i) {
    const Graph g = testing::random_decorated_block(rng, 13);
    if (*diameter(g) < 3) continue;
    ++done;
    CHECK(diameter_three_value(g) == oracle_min_colours(g).lec);
  }
}

}
