#include "doctest.h"

#include <random>

#include "csglab/analysis.hpp"
#include "csglab/dynamics.hpp"
#include "csglab/errors.hpp"
#include "csglab/instances.hpp"
#include "oracle.hpp"

using namespace csglab;

namespace {

std::vector<GameInstance> sample_instances() {
  std::vector<GameInstance> out;
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = 2 + static_cast<int>(seed % 2);
    o.family = static_cast<SchemeFamily>(seed % 4);
    out.push_back(random_sp(o));
    RandomAsymmetricOptions a;
    a.seed = seed;
    a.agents = 2 + static_cast<int>(seed % 2);
    a.family = static_cast<SchemeFamily>(seed % 4);
    a.max_edges = 8;
    out.push_back(random_asymmetric(a));
  }
  return out;
}

}  // namespace

TEST_CASE("best response attains the brute-force minimum") {
  for (const auto& g : sample_instances()) {
    const auto sets = oracle::strategy_sets(g);
    for (const auto& p : enumerate_profiles(g)) {
      const auto c = oracle::costs(g, p.paths());
      for (int j = 0; j < g.num_agents(); ++j) {
        const auto best = oracle::best_unilateral(g, sets, p.paths(), static_cast<std::size_t>(j));
        const auto d = best_response(g, p, j);
        if (best < c.agent[static_cast<std::size_t>(j)]) {
          REQUIRE(d);
          CHECK(d->new_cost.value() == best);
          CHECK(d->old_cost.value() == c.agent[static_cast<std::size_t>(j)]);
          CHECK(is_feasible(g, p.with_path(g.graph(), j, d->path)));
          const auto first = first_improving_response(g, p, j);
          REQUIRE(first);
          CHECK(first->new_cost < first->old_cost);
        } else {
          CHECK_FALSE(d);
          CHECK_FALSE(first_improving_response(g, p, j));
        }
      }
      CHECK(static_cast<bool>(is_nash(g, p)) == oracle::is_nash(g, sets, p.paths()));
    }
  }
}

TEST_CASE("dynamics reach an equilibrium under every policy") {
  std::mt19937_64 rng(5);
  for (const auto& g : sample_instances()) {
    const auto all = enumerate_profiles(g);
    for (int order = 0; order < 3; ++order) {
      for (int rule = 0; rule < 2; ++rule) {
        DeviationPolicy policy;
        policy.order = static_cast<AgentOrder>(order);
        policy.rule = static_cast<ImprovementRule>(rule);
        policy.seed = rng();
        for (int j = g.num_agents() - 1; j >= 0; --j) policy.permutation.push_back(j);
        const auto trace = run_dynamics(g, all[rng() % all.size()], policy);
        CHECK(is_nash(g, trace.terminal));
        Rational prev = trace.start_potential;
        for (const auto& s : trace.steps) {
          CHECK(s.new_cost < s.old_cost);
          CHECK(prev - s.potential_after == s.old_cost - s.new_cost);
          prev = s.potential_after;
        }
        CHECK(prev == potential(g, trace.terminal));
      }
    }
  }
}

TEST_CASE("dynamics from an equilibrium take no step; step cap enforced") {
  const GameInstance g = fig3_parallel(4, Rational(1, 100));
  const auto opt = optimal_profile(g, Criterion::SumCost);
  const auto trace = run_dynamics(g, opt.profile);
  CHECK(sum_cost(g, trace.terminal) == Rational(13, 4));
  CHECK(run_dynamics(g, trace.terminal).step_count() == 0);
  CHECK_THROWS_AS(run_dynamics(g, opt.profile, {}, 1), StepCapExceeded);

  DeviationPolicy bad;
  bad.order = AgentOrder::FixedPermutation;
  bad.permutation = {0, 0, 1, 2};
  CHECK_THROWS_AS(run_dynamics(g, opt.profile, bad), ParameterViolation);
}

TEST_CASE("constructive procedure reroutes out of the bad DAG equilibrium") {
  const GameInstance g = fig2_dag(Rational(1), Rational(10));
  const auto paths = fig2_paths();
  const auto opt = optimal_profile(g, Criterion::MaxCost);
  CHECK(opt.value == Rational(3));
  const StrategyProfile bad(g.graph(), {paths.s_a_b_t, paths.s_b_c_t});
  const auto r = constructive_min_maxcost_ne(g, opt.profile, {}, bad);
  REQUIRE(r.rounds.size() == 1);
  CHECK(r.rounds[0].removed_agent == 0);
  CHECK(r.rounds[0].rerouted);
  CHECK(r.rounds[0].equilibrium_max_cost == Rational(12));
  CHECK(r.max_cost == Rational(3));
  CHECK(is_nash(g, r.equilibrium));
  CHECK(r.equilibrium_potentials.front() > r.equilibrium_potentials.back());
  CHECK_THROWS_AS(constructive_min_maxcost_ne(random_asymmetric({}), opt.profile), NotSymmetric);
}
