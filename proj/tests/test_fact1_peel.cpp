#include <doctest.h>

#include <random>

#include "antipath/fact1.hpp"
#include "antipath/generators.hpp"
#include "antipath/peel.hpp"
#include "oracles.hpp"

using namespace antipath;

namespace {

// X = x_0..x_{m-1} = 0..m-1, Y = y_1..y_m = m..2m-1.
Fact1Instance random_instance(std::mt19937_64& rng, int m, int ell) {
  std::vector<Vertex> xs(m), ys(m);
  for (int i = 0; i < m; ++i) {
    xs[i] = i;
    ys[i] = m + i;
  }
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
  std::vector<UndirectedPair> f0, fm;
  for (Vertex u = 0; u < 2 * m; ++u)
    for (Vertex v = u + 1; v < 2 * m; ++v) {
      if (coin(rng)) f0.emplace_back(u, v);
      if (coin(rng)) fm.emplace_back(u, v);
    }
  return Fact1Instance(xs, ys, f0, fm, ell);
}

}  // namespace

TEST_CASE("fact1 examples") {
  // m = 1: x_0 = 0, y_1 = 1.
  const Fact1Instance one({0}, {1}, {{0, 1}}, {{0, 1}}, 1);
  CHECK(fact1_index(one) == 1);

  // m = 3, ell = 2: x = 0,1,2; y_1..y_3 = 3,4,5.
  const Fact1Instance three({0, 1, 2}, {3, 4, 5}, {{0, 4}, {0, 5}}, {{0, 5}, {1, 5}}, 2);
  CHECK(fact1_index(three) == 2);
  CHECK(oracle_ref::fact1_scan(three) == 2);

  const Fact1Instance none({0, 1}, {2, 3}, {}, {{0, 3}}, 1);
  CHECK_FALSE(fact1_index(none));
}

TEST_CASE("fact1 rejects malformed instances") {
  CHECK_THROWS_AS(Fact1Instance({0, 1}, {2}, {}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fact1Instance({}, {}, {}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fact1Instance({0}, {1}, {}, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Fact1Instance({0}, {1}, {{0, 7}}, {}, 1), std::invalid_argument);
}

TEST_CASE("fact1 agrees with a linear scan") {
  std::mt19937_64 rng(2024);
  int guaranteed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const int ell = 1 + static_cast<int>(rng() % m);
    const Fact1Instance inst = random_instance(rng, m, ell);
    CHECK(fact1_index(inst) == oracle_ref::fact1_scan(inst));
    CHECK(inst.degree_sum() == oracle_ref::fact1_degree_sum(inst));
    if (inst.degree_sum() >= m + ell) {
      ++guaranteed;
      CHECK(fact1_index(inst).has_value());
    }
  }
  CHECK(guaranteed > 100);
}

TEST_CASE("peel examples") {
  const Digraph k3 = build_graph(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}, GraphKind::Digraph);
  const Digraph same = peel(k3, Rational(1));
  CHECK(same == k3);
  CHECK(pseudo_semidegree(same) == 2);

  // Interior stubs have degree 1 > 1/2, so the directed path survives.
  const OrientedGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const Digraph kept = peel(path, Rational(1, 2));
  CHECK(kept == path);
  CHECK(pseudo_semidegree(kept) == 1);

  CHECK(peel(path, Rational(1)).size() == 0);
  CHECK(peel(path, Rational(0)) == path);
  CHECK_THROWS_AS(peel(path, Rational(-1, 2)), std::invalid_argument);
  CHECK(peel(path, Rational(1)).kind() == GraphKind::Oriented);
}

TEST_CASE("peel matches round-based recomputation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1);
    const Digraph d = gen_random_digraph(n, rng() % (max_edges + 1), rng());
    const std::int64_t num = static_cast<std::int64_t>(rng() % 13);
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 4);
    const auto expected = oracle_ref::peel_rounds(n, oracle_ref::edge_set(d), num, den);
    const Digraph got = peel(d, Rational(num, den));
    CHECK(oracle_ref::edge_set(got) == expected);
    for (Vertex v = 0; v < n; ++v) {
      for (int deg : {got.out_degree(v), got.in_degree(v)}) CHECK((deg == 0 || deg * den > num));
    }
  }
}

TEST_CASE("peel keeps an edge whenever |E| > 2 s |V|") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int ell = 1 + trial % 6;
    const int n = 2 * ell + 3 + static_cast<int>(rng() % 10);
    const std::size_t edges = static_cast<std::size_t>(ell) * n + 1 + rng() % n;
    const Digraph d = gen_random_digraph(n, edges, rng());
    const Digraph core = peel(d, Rational(ell, 2));
    REQUIRE(core.size() > 0);
    CHECK(2 * oracle_ref::pseudo_semidegree(core) >= ell + 1);
  }
}
