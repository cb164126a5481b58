#include "doctest.h"

#include "csglab/analysis.hpp"
#include "csglab/errors.hpp"
#include "csglab/extension.hpp"
#include "csglab/instances.hpp"
#include "oracle.hpp"

using namespace csglab;

TEST_CASE("DAG instance parameters and self-check") {
  CHECK_THROWS_AS(fig2_dag(Rational(1), Rational(1)), ParameterViolation);
  CHECK_THROWS_AS(fig2_dag(Rational(0), Rational(1)), ParameterViolation);
  CHECK_THROWS_AS(fig2_dag(Rational(2), Rational(1), true), ParameterViolation);
  CHECK_NOTHROW(fig2_dag(Rational(1), Rational(1), true));
  const GameInstance g = fig2_dag(Rational(1), Rational(2));
  CHECK(oracle::st_paths(g.graph(), 0, g.graph().num_nodes() - 1).size() == 5);
}

TEST_CASE("parallel-link families") {
  CHECK_THROWS_AS(fig3_parallel(1, Rational(1, 10)), ParameterViolation);
  CHECK_THROWS_AS(fig3_parallel(3, Rational(0)), ParameterViolation);
  CHECK_THROWS_AS(two_link(0), ParameterViolation);
  const GameInstance g = fig3_parallel(3, Rational(1, 10));
  CHECK(g.graph().num_edges() == 4);
  CHECK(g.base_cost(0) == Rational(1, 3));
  CHECK(g.capacity(3) == 3);
  CHECK(classify(two_link(4).graph()) == GraphClass::ParallelLink);
}

TEST_CASE("random generators are deterministic and honour their options") {
  RandomSpOptions o;
  o.seed = 9;
  o.agents = 3;
  const GameInstance a = random_sp(o), b = random_sp(o);
  CHECK(a.schemes() == b.schemes());
  CHECK(a.graph().num_edges() <= o.max_edges);
  CHECK(max_flow(a.graph(), a.capacities(), a.graph().source(), a.graph().sink()).value >= 3);
  o.family = SchemeFamily::Ordinary;
  const GameInstance ordinary = random_sp(o);
  for (const auto& s : ordinary.schemes()) CHECK(s.is_ordinary());
  CHECK(parse_scheme_family("random-valid") == SchemeFamily::RandomValid);
  CHECK_THROWS_AS(parse_scheme_family("bogus"), ParameterViolation);

  RandomAsymmetricOptions r;
  r.seed = 4;
  const GameInstance c = random_asymmetric(r);
  CHECK_FALSE(c.is_symmetric());
  CHECK(classify(c.graph()) == GraphClass::Dag);
}

TEST_CASE("feasible extension lands in the brute-force extension set") {
  for (std::uint64_t seed = 500; seed < 530; ++seed) {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = 3;
    const GameInstance g = random_sp(o);
    const auto all = enumerate_profiles(g);
    const StrategyProfile& larger = all[seed % all.size()];
    const StrategyProfile smaller = all[(seed * 7) % all.size()].without(g.graph(), 0).without(g.graph(), 1);
    const Path p = feasible_extension(g, larger, smaller);
    for (EdgeId e : p) CHECK(larger.load(e) > 0);
    CHECK(oracle::costs(g, smaller.with_extra(g.graph(), p).paths()).feasible);
  }
  const GameInstance dag = fig2_dag(Rational(1), Rational(2));
  const auto all = enumerate_profiles(dag);
  CHECK_THROWS_AS(feasible_extension(dag, all[0], all[0].without(dag.graph(), 0)), NotSeriesParallel);
}
