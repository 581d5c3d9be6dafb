#include <doctest.h>

#include "antipath/generators.hpp"
#include "antipath/oracle.hpp"
#include "oracles.hpp"

using namespace antipath;

namespace {
constexpr Orientation kBoth[] = {Orientation::ForwardFirst, Orientation::BackwardFirst};
}

TEST_CASE("longest_antipath fixtures") {
  const OracleResult tri = longest_antipath(OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(tri.max_length == 1);
  CHECK(tri.exact);

  const OracleResult blowup = longest_antipath(gen_cycle_blowup(3, 2));
  CHECK(blowup.max_length == 3);
  REQUIRE(blowup.witness);
  CHECK(blowup.witness->length() == 3);

  CHECK(longest_antipath(OrientedGraph(4, {})).max_length == 0);
  CHECK(longest_antipath(gen_cycle_blowup(4, 1)).max_length == 1);
  CHECK(longest_antipath(gen_tournament_union(3, 1)).max_length == 1);
}

TEST_CASE("has_antipath fixtures") {
  const OrientedGraph t7 = gen_tournament_union(7, 1);
  for (Orientation o : kBoth) {
    CHECK(has_antipath(t7, 4, o));
    CHECK_FALSE(has_antipath(gen_cycle_blowup(3, 2), 4, o));
    CHECK(has_antipath(OrientedGraph(2, {{0, 1}}), 1, o));
    CHECK_FALSE(has_antipath(gen_tournament_union(5, 2), 5, o));
  }
}

TEST_CASE("oracle agrees with plain enumeration") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const OrientedGraph g = gen_random_oriented(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed);
    const OracleResult r = longest_antipath(g);
    REQUIRE(r.exact);
    CHECK(r.max_length == oracle_ref::brute_longest(g));
    if (r.witness) CHECK_FALSE(antipath_defect(g, r.witness->verts()));
    for (int k = 0; k <= n; ++k)
      for (Orientation o : kBoth) {
        const bool brute = oracle_ref::brute_has_antipath(g, k, o == Orientation::ForwardFirst);
        CHECK(has_antipath(g, k, o) == brute);
        if (k <= r.max_length) CHECK(r.realizes(k, o) == brute);
      }
  }
}

TEST_CASE("monotonicity over sub-windows") {
  enumerate_oriented_graphs(4).for_each([](const OrientedGraph& g) {
    for (int k = 2; k <= 3; ++k)
      for (Orientation o : kBoth)
        if (has_antipath(g, k, o)) {
          CHECK(has_antipath(g, k - 2, o));
          CHECK((has_antipath(g, k - 1, Orientation::ForwardFirst) || has_antipath(g, k - 1, Orientation::BackwardFirst)));
        }
  });
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  const OrientedGraph t = gen_random_tournament(14, 3);
  const OracleResult r = longest_antipath(t, 20);
  CHECK_FALSE(r.exact);
  CHECK(r.expansions > 20);
  REQUIRE(r.witness);
  CHECK_FALSE(antipath_defect(t, r.witness->verts()));
  CHECK_THROWS_AS(has_antipath(t, 13, Orientation::ForwardFirst, 5), BudgetExhausted);
}

TEST_CASE("longest antipath below k is odd on small graphs with large pseudo-semidegree") {
  int checked = 0;
  enumerate_oriented_graphs(4).for_each([&](const OrientedGraph& g) {
    const int d = oracle_ref::pseudo_semidegree(g);
    const int m = oracle_ref::brute_longest(g);
    for (int k = 1; k <= 2 * d; ++k) {
      ++checked;
      if (m < k) CHECK(m % 2 == 1);
    }
  });
  CHECK(checked > 0);
}
