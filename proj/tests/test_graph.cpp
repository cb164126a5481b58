#include "doctest.h"

#include <random>
#include <set>

#include "csglab/errors.hpp"
#include "csglab/graph.hpp"
#include "oracle.hpp"

using namespace csglab;

namespace {

Graph diamond() {
  // Wheatstone bridge: s=0 a=1 b=2 t=3 with the chord a->b
  return Graph({"s", "a", "b", "t"}, {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 2, 3}, {4, 1, 2}}, 0, 3);
}

SpExpression random_expression(std::mt19937_64& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) return SpExpression::edge();
  auto l = random_expression(rng, depth - 1);
  auto r = random_expression(rng, depth - 1);
  return rng() % 2 ? SpExpression::series(l, r) : SpExpression::parallel(l, r);
}

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS(Graph({"s", "t"}, {{1, 0, 1}}, 0, 1));
  CHECK_THROWS(Graph({"s", "s"}, {{0, 0, 1}}, 0, 1));
  CHECK_THROWS(Graph({"s", "t"}, {{0, 0, 0}}, 0, 1));
  CHECK_THROWS(Graph({"s", "t"}, {{0, 0, 1}}, 0, 0));
  CHECK_THROWS(Graph({"s", "t"}, {{0, 0, 5}}, 0, 1));
  CHECK(diamond().find_node("b") == 2);
  CHECK_FALSE(diamond().find_node("z"));
}

TEST_CASE("path enumeration agrees with the edge-subset oracle") {
  const Graph g = diamond();
  const auto paths = enumerate_st_paths(g, 0, 3);
  CHECK(std::set<Path>(paths.begin(), paths.end()) == oracle::st_paths(g, 0, 3));
  CHECK(paths.size() == 3);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
  CHECK_THROWS_AS(enumerate_st_paths(g, 0, 3, 2), PathExplosion);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Graph sp = build_from_sp(random_expression(rng, 3));
    if (sp.num_edges() > 12) continue;
    const auto got = enumerate_st_paths(sp, sp.source(), sp.sink());
    CHECK(std::set<Path>(got.begin(), got.end()) == oracle::st_paths(sp, sp.source(), sp.sink()));
    CHECK(got.size() == std::set<Path>(got.begin(), got.end()).size());
  }
}

TEST_CASE("path explosion reports the cap and the overflow count") {
  // 2^4 paths through four parallel pairs in series
  auto pair = SpExpression::parallel(SpExpression::edge(), SpExpression::edge());
  auto chain = SpExpression::series(SpExpression::series(pair, pair), SpExpression::series(pair, pair));
  const Graph g = build_from_sp(chain);
  CHECK(enumerate_st_paths(g, g.source(), g.sink()).size() == 16);
  try {
    enumerate_st_paths(g, g.source(), g.sink(), 10);
    FAIL("expected PathExplosion");
  } catch (const PathExplosion& e) {
    CHECK(e.cap() == 10);
    CHECK(e.count() == 11);
  }
}

TEST_CASE("classification") {
  const Graph pl({"s", "t"}, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}, 0, 1);
  CHECK(classify(pl) == GraphClass::ParallelLink);
  CHECK(classify(build_from_sp(SpExpression::series(SpExpression::edge(), SpExpression::edge()))) ==
        GraphClass::SeriesParallel);
  CHECK(classify(diamond()) == GraphClass::Dag);
  const Graph nested({"s", "a", "t"}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}, {3, 1, 2}}, 0, 2);
  CHECK(classify(nested) == GraphClass::SeriesParallel);
  // the bridge with chords both ways has the cycle a->b->a
  const Graph cyc({"s", "a", "b", "t"}, {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 2, 3}, {4, 1, 2}, {5, 2, 1}}, 0, 3);
  CHECK(classify(cyc) == GraphClass::General);
  CHECK_FALSE(is_acyclic(cyc));
  const Graph two_chords({"s", "a", "b", "c", "t"},
                     {{0, 0, 1}, {1, 0, 2}, {2, 1, 3}, {3, 1, 2}, {4, 2, 3}, {5, 2, 4}, {6, 3, 4}}, 0, 4);
  CHECK(classify(two_chords) == GraphClass::Dag);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto cls = classify(build_from_sp(random_expression(rng, 4)));
    CHECK((cls == GraphClass::ParallelLink || cls == GraphClass::SeriesParallel));
  }
}

TEST_CASE("max flow equals the min cut oracle; decomposition is consistent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 80; ++i) {
    const Graph g = build_from_sp(random_expression(rng, 3));
    if (g.num_nodes() > 14) continue;
    std::vector<long> cap(static_cast<std::size_t>(g.num_edges()));
    for (auto& c : cap) c = static_cast<long>(rng() % 4);
    const Flow f = max_flow(g, cap, g.source(), g.sink());
    CHECK(f.value == oracle::min_cut(g, cap, g.source(), g.sink()));
    CHECK_NOTHROW(check_flow(g, cap, f, g.source(), g.sink()));
    CHECK_FALSE(augmenting_path(g, cap, f, g.source(), g.sink()));
    const auto paths = decompose_flow(g, f, g.source(), g.sink());
    CHECK(static_cast<long>(paths.size()) == f.value);
    std::vector<long> rebuilt(cap.size());
    for (const auto& p : paths) {
      CHECK(g.is_simple_path(p, g.source(), g.sink()));
      for (EdgeId e : p) ++rebuilt[static_cast<std::size_t>(e)];
    }
    CHECK(rebuilt == f.edge_flow);
  }
}

TEST_CASE("augmenting path may use backward arcs") {
  // s->a->b->t plus s->b and a->t; one unit along s-a-b-t blocks a naive second path
  const Graph g({"s", "a", "b", "t"}, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 0, 2}, {4, 1, 3}}, 0, 3);
  const std::vector<long> cap(5, 1);
  Flow f{{1, 1, 1, 0, 0}, 1};
  const auto path = augmenting_path(g, cap, f, 0, 3);
  REQUIRE(path);
  const bool has_backward = std::any_of(path->begin(), path->end(), [](const ResidualArc& a) { return !a.forward; });
  CHECK(has_backward);
  augment(f, *path);
  CHECK(f.value == 2);
  CHECK_NOTHROW(check_flow(g, cap, f, 0, 3));
  CHECK(f.edge_flow[1] == 0);
}
