#include "doctest.h"

#include <random>

#include "csglab/analysis.hpp"
#include "csglab/errors.hpp"
#include "csglab/game.hpp"
#include "csglab/instances.hpp"
#include "oracle.hpp"

using namespace csglab;

TEST_CASE("scheme validation flags each property") {
  CHECK(validate_scheme(make_ordinary_scheme(Rational(6), 3)).empty());
  CHECK(validate_scheme(make_threshold_scheme(Rational(6), 3, 2)).empty());
  CHECK(make_ordinary_scheme(Rational(6), 3).is_ordinary());
  CHECK_FALSE(make_threshold_scheme(Rational(6), 3, 3).is_ordinary());
  CHECK_THROWS_AS(make_threshold_scheme(Rational(6), 3, 4), ParameterViolation);

  auto has = [](const CostSharingScheme& s, SchemeProperty p) {
    for (const auto& v : validate_scheme(s))
      if (v.property == p) return true;
    return false;
  };
  CHECK(has(CostSharingScheme(Rational(6), 2, {Rational(5), Rational(3)}), SchemeProperty::FullCostAlone));
  CHECK(has(CostSharingScheme(Rational(6), 2, {Rational(6), Rational(2)}), SchemeProperty::FairShareFloor));
  CHECK(has(CostSharingScheme(Rational(6), 3, {Rational(6), Rational(3), Rational(4)}), SchemeProperty::NonIncreasing));
  CHECK(has(CostSharingScheme(Rational(6), 2, {Rational(7), Rational(3)}), SchemeProperty::AtMostBase));
  CHECK_THROWS(CostSharingScheme(Rational(6), 2, {Rational(6)}));
}

TEST_CASE("scheme tables and prefix sums") {
  const auto s = make_threshold_scheme(Rational(101, 100), 4, 4);
  CHECK(s.share(3) == Rational(101, 100));
  CHECK(s.share(4) == Rational(101, 400));
  CHECK(s.cumulative(0) == Rational(0));
  CHECK(s.cumulative(4) == Rational(303, 100) + Rational(101, 400));
  CHECK(s.scaled(Rational(2)).share(4) == Rational(101, 200));
}

TEST_CASE("instances reject invalid schemes and infeasible demand") {
  const Graph g({"s", "t"}, {{0, 0, 1}}, 0, 1);
  CHECK_THROWS_AS(GameInstance::symmetric(g, {make_ordinary_scheme(Rational(1), 1)}, 2, {}), InfeasibleGame);
  CHECK_THROWS_AS(GameInstance::symmetric(g, {CostSharingScheme(Rational(2), 2, {Rational(2), Rational(1, 2)})}, 1, {}),
                  SchemeViolationError);
  CHECK_NOTHROW(GameInstance::symmetric(g, {make_ordinary_scheme(Rational(1), 2)}, 2, {}));
}

TEST_CASE("costs and potential agree with the oracle on every profile") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = 2 + static_cast<int>(seed % 2);
    o.family = static_cast<SchemeFamily>(seed % 4);
    const GameInstance g = random_sp(o);
    for (const auto& p : enumerate_profiles(g)) {
      const auto c = oracle::costs(g, p.paths());
      REQUIRE(c.feasible);
      for (int j = 0; j < g.num_agents(); ++j) CHECK(agent_cost(g, p, j).value() == c.agent[static_cast<std::size_t>(j)]);
      CHECK(sum_cost(g, p).value() == c.sum);
      CHECK(max_cost(g, p).value() == c.max);
      CHECK(potential(g, p).value() == c.potential);
    }
  }
}

TEST_CASE("overloaded profiles") {
  const GameInstance g = two_link(2);
  const StrategyProfile ok(g.graph(), {{0}, {0}});
  CHECK(is_feasible(g, ok));
  const GameInstance tight = fig2_dag(Rational(1), Rational(2));
  const StrategyProfile over(tight.graph(), {{0, 2, 6}, {0, 2, 6}});
  CHECK_FALSE(is_feasible(tight, over));
  CHECK(agent_cost(tight, over, 0).is_infinite());
  CHECK_THROWS_AS(potential(tight, over), InfeasibleProfile);
  CHECK_THROWS_AS(is_nash(tight, over), InfeasibleProfile);
  CHECK_THROWS(check_profile(tight, StrategyProfile(tight.graph(), {{0, 2, 6}})));
  CHECK_THROWS(StrategyProfile(tight.graph(), {{0, 6}}));
}
