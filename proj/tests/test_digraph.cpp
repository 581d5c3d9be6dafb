#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "antipath/antipath.hpp"
#include "antipath/bound.hpp"
#include "antipath/digraph.hpp"
#include "antipath/generators.hpp"
#include "antipath/oracle.hpp"
#include "oracles.hpp"

using namespace antipath;

namespace {

OrientedGraph triangle() { return OrientedGraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

GraphError::Code error_code(int n, std::vector<Edge> edges, GraphKind kind) {
  try {
    build_graph(n, std::move(edges), kind);
  } catch (const GraphError& e) {
    return e.code();
  }
  FAIL("expected GraphError");
  return GraphError::Code::LoopEdge;
}

}  // namespace

TEST_CASE("rational and degree bounds compare exactly") {
  CHECK(Rational(6, 8) == Rational(3, 4));
  CHECK(Rational(-3, 4).floor() == -1);
  CHECK(Rational(7, 4).ceil() == 2);
  CHECK(less(1, Rational(7, 4)));
  CHECK_FALSE(less(2, Rational(7, 4)));
  CHECK(less_equal(2, Rational(2)));

  CHECK(default_bound(3).min_degree() == 2);  // 7/4
  CHECK(default_bound(4).min_degree() == 3);  // 10/4
  CHECK(half_bound(4).min_degree() == 3);     // > 2
  CHECK(dense_bound(8).min_degree() == 6);    // > 5
  CHECK(dense_bound(5).min_degree() == 3);    // > 11/4
  CHECK(default_bound(3).to_string() == ">= 7/4");
  CHECK(DegreeBound().holds(0));
  CHECK_FALSE(DegreeBound::above(Rational(2)).holds(2));
}

TEST_CASE("build_graph accepts and rejects per kind") {
  const Digraph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}}, GraphKind::Oriented);
  CHECK(tri.kind() == GraphKind::Oriented);
  CHECK(tri.size() == 3);

  CHECK(error_code(2, {{0, 1}, {1, 0}}, GraphKind::Oriented) == GraphError::Code::TwoCycleInOriented);
  const Digraph two = build_graph(2, {{0, 1}, {1, 0}}, GraphKind::Digraph);
  CHECK(two.has_two_cycle());

  CHECK(error_code(2, {{0, 0}}, GraphKind::Digraph) == GraphError::Code::LoopEdge);
  CHECK(error_code(2, {{0, 2}}, GraphKind::Digraph) == GraphError::Code::VertexOutOfRange);
  CHECK(error_code(2, {{0, 1}, {0, 1}}, GraphKind::Digraph) == GraphError::Code::DuplicateEdge);
}

TEST_CASE("adjacency agrees with the edge set") {
  const OrientedGraph g = gen_random_oriented(12, 0.4, 5);
  const auto edges = oracle_ref::edge_set(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    CHECK(std::is_sorted(g.out(u).begin(), g.out(u).end()));
    CHECK(std::is_sorted(g.in(u).begin(), g.in(u).end()));
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool e = edges.count({u, v}) > 0;
      CHECK(g.has_edge(u, v) == e);
      CHECK((std::find(g.out(u).begin(), g.out(u).end(), v) != g.out(u).end()) == e);
      CHECK((std::find(g.in(v).begin(), g.in(v).end(), u) != g.in(v).end()) == e);
    }
  }
}

TEST_CASE("degree profile") {
  const DegreeProfile tri = degree_profile(triangle());
  CHECK(tri.delta0 == 1);
  CHECK(tri.pseudo_delta0 == 1);

  CHECK(pseudo_semidegree(OrientedGraph(4, {})) == 0);

  const OrientedGraph tri_iso(4, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(semidegree(tri_iso) == 0);
  CHECK(pseudo_semidegree(tri_iso) == 1);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const OrientedGraph g = gen_random_oriented(9, 0.5, seed);
    const DegreeProfile p = degree_profile(g);
    CHECK(p.pseudo_delta0 == oracle_ref::pseudo_semidegree(g));
    CHECK(p.delta0 <= p.pseudo_delta0);
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(reverse(triangle())) == triangle());
  const OrientedGraph transitive(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(reverse(transitive) == OrientedGraph(3, {{1, 0}, {2, 0}, {2, 1}}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const OrientedGraph t = gen_random_tournament(10, seed);
    CHECK(pseudo_semidegree(reverse(t)) == pseudo_semidegree(t));
  }
}

TEST_CASE("validate_antipath") {
  const OrientedGraph cherry(3, {{0, 1}, {2, 1}});
  const AntiPath p = validate_antipath(cherry, {0, 1, 2});
  CHECK(p.length() == 2);
  CHECK(p.orientation() == Orientation::ForwardFirst);
  CHECK(p.reversed().orientation() == Orientation::ForwardFirst);

  auto defect = antipath_defect(triangle(), std::vector<Vertex>{0, 1, 2});
  REQUIRE(defect);
  CHECK(defect->code == PathDefect::Code::NotAlternating);
  CHECK(defect->index == 1);

  const AntiPath e = validate_antipath(triangle(), {2, 0});
  CHECK(e.length() == 1);
  CHECK(validate_antipath(triangle(), {0, 2}).orientation() == Orientation::BackwardFirst);

  CHECK(antipath_defect(cherry, std::vector<Vertex>{})->code == PathDefect::Code::Empty);
  CHECK(antipath_defect(cherry, std::vector<Vertex>{0, 5})->code == PathDefect::Code::VertexOutOfRange);
  CHECK(antipath_defect(cherry, std::vector<Vertex>{0, 1, 0})->code == PathDefect::Code::NotDistinct);
  CHECK(antipath_defect(cherry, std::vector<Vertex>{0, 2})->code == PathDefect::Code::MissingEdge);

  const Digraph two = build_graph(2, {{0, 1}, {1, 0}}, GraphKind::Digraph);
  CHECK(antipath_defect(two, std::vector<Vertex>{0, 1})->code == PathDefect::Code::AmbiguousEdge);
  CHECK_THROWS_AS(validate_antipath(triangle(), {0, 1, 2}), PathError);
}

TEST_CASE("validate_antipath agrees with the reference check") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const OrientedGraph g = gen_random_oriented(7, 0.6, trial);
    const auto edges = oracle_ref::edge_set(g);
    std::vector<Vertex> seq(7);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    seq.resize(2 + trial % 5);
    const auto ref = oracle_ref::alternating(edges, seq);
    const auto defect = antipath_defect(g, seq);
    CHECK(ref.has_value() == !defect.has_value());
    if (ref) CHECK(validate_antipath(g, seq).edge_forward(0) == *ref);
  }
}

TEST_CASE("windows and reversal keep validity") {
  const OrientedGraph g = gen_tournament_union(9, 1);
  const AntiPath p = validate_antipath(g, {0, 1, 6, 7, 3});
  for (int start = 0; start + 2 <= p.length(); ++start) {
    const AntiPath w = p.window(start, 2);
    CHECK_FALSE(antipath_defect(g, w.verts()));
    CHECK(w.edge_forward(0) == p.edge_forward(start));
  }
  CHECK_FALSE(antipath_defect(g, p.reversed().verts()));
}

TEST_CASE("validate_anticycle") {
  const OrientedGraph c4(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  const AntiCycle c = validate_anticycle(c4, {0, 1, 2, 3});
  CHECK(c.length() == 4);
  CHECK(c.starts_with_source());
  CHECK_FALSE(validate_anticycle(c4, {1, 2, 3, 0}).starts_with_source());

  const OrientedGraph directed(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(anticycle_defect(directed, std::vector<Vertex>{0, 1, 2, 3})->code == PathDefect::Code::NotAlternating);
  CHECK(anticycle_defect(triangle(), std::vector<Vertex>{0, 1, 2})->code == PathDefect::Code::OddCycleLength);
}

TEST_CASE("generators") {
  const OrientedGraph t3 = gen_tournament_union(3, 1);
  CHECK(t3 == triangle());
  CHECK(semidegree(t3) == 1);

  const OrientedGraph t5 = gen_tournament_union(5, 2);
  CHECK(t5.order() == 10);
  CHECK(t5.size() == 20);
  CHECK(semidegree(t5) == 2);

  CHECK_THROWS_AS(gen_tournament_union(4, 1), GeneratorError);

  const OrientedGraph b = gen_cycle_blowup(3, 2);
  CHECK(b.order() == 6);
  CHECK(b.size() == 12);
  CHECK(semidegree(b) == 2);
  CHECK(gen_cycle_blowup(4, 1) == OrientedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK_THROWS_AS(gen_cycle_blowup(2, 1), GeneratorError);

  CHECK(gen_random_tournament(1, 3).size() == 0);
  CHECK(gen_random_oriented(1, 0.7, 3).size() == 0);
  CHECK(gen_random_tournament(20, 7) == gen_random_tournament(20, 7));
  CHECK(gen_random_tournament(20, 7).size() == 190);

  // Shuffled rotational tournaments stay regular.
  const OrientedGraph shuffled = gen_tournament_union(9, 1, 42);
  CHECK(semidegree(shuffled) == 4);
  CHECK(pseudo_semidegree(shuffled) == 4);

  const Digraph rd = gen_random_digraph(8, 30, 9);
  CHECK(rd.size() == 30);
  CHECK(rd.kind() == GraphKind::Digraph);
}

TEST_CASE("random tournaments on 20 vertices usually have semidegree at least 5") {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) good += semidegree(gen_random_tournament(20, seed)) >= 5;
  MESSAGE("tournaments with semidegree >= 5: " << good << " / 100");
  CHECK(good > 50);
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_oriented_graphs(2).size() == 3);
  CHECK(enumerate_oriented_graphs(3).size() == 27);
  CHECK(enumerate_oriented_graphs(5).size() == 59049);
  CHECK_THROWS_AS(enumerate_oriented_graphs(6), EnumerationTooLarge);
  CHECK(enumerate_oriented_graphs(6, true).size() == 14348907);
  CHECK_THROWS_AS(enumerate_oriented_graphs(7, true), EnumerationTooLarge);

  std::set<std::vector<Edge>> distinct;
  enumerate_oriented_graphs(3).for_each([&](const OrientedGraph& g) { distinct.insert(g.edges()); });
  CHECK(distinct.size() == 27);
}
