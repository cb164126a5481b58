#include "csglab/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "csglab/errors.hpp"

namespace csglab {

std::string_view to_string(Criterion c) { return c == Criterion::SumCost ? "sum-cost" : "max-cost"; }

Rational social_cost(const GameInstance& instance, const StrategyProfile& profile, Criterion c) {
  return c == Criterion::SumCost ? sum_cost(instance, profile) : max_cost(instance, profile);
}

std::vector<StrategyProfile> enumerate_profiles(const GameInstance& instance, std::size_t cap) {
  const Graph& g = instance.graph();
  const auto n = static_cast<std::size_t>(instance.num_agents());
  std::vector<std::vector<Path>> options;
  options.reserve(n);
  std::size_t product = 1;
  for (const Terminals& t : instance.agents()) {
    options.push_back(enumerate_st_paths(g, t.source, t.sink, cap));
    product *= std::max<std::size_t>(options.back().size(), 1);
    if (product > cap) throw PathExplosion(cap, product);
  }

  std::vector<StrategyProfile> out;
  std::vector<int> load(static_cast<std::size_t>(g.num_edges()), 0);
  std::vector<Path> chosen;
  chosen.reserve(n);
  auto extend = [&](auto&& self, std::size_t agent) -> void {
    if (agent == n) {
      out.emplace_back(g, chosen);
      return;
    }
    for (const Path& p : options[agent]) {
      const bool fits = std::all_of(p.begin(), p.end(), [&](EdgeId e) {
        return load[static_cast<std::size_t>(e)] < instance.capacity(e);
      });
      if (!fits) continue;
      for (EdgeId e : p) ++load[static_cast<std::size_t>(e)];
      chosen.push_back(p);
      self(self, agent + 1);
      chosen.pop_back();
      for (EdgeId e : p) --load[static_cast<std::size_t>(e)];
    }
  };
  extend(extend, 0);
  return out;
}

Optimum optimal_profile(const GameInstance& instance, std::span<const StrategyProfile> feasible, Criterion criterion) {
  if (feasible.empty()) throw InfeasibleGame("no feasible profile to optimize over");
  std::optional<Optimum> best;
  for (const StrategyProfile& p : feasible) {
    Rational v = social_cost(instance, p, criterion);
    if (!best || v < best->value) best = Optimum{p, std::move(v)};
  }
  return *best;
}

Optimum optimal_profile(const GameInstance& instance, Criterion criterion, std::size_t cap) {
  const auto profiles = enumerate_profiles(instance, cap);
  return optimal_profile(instance, profiles, criterion);
}

std::vector<EquilibriumClass> EquilibriumSet::distinct() const {
  std::map<std::vector<Path>, std::size_t> index;
  std::vector<EquilibriumClass> out;
  for (const EquilibriumEntry& m : members) {
    auto key = m.profile.paths();
    std::sort(key.begin(), key.end());
    auto [it, inserted] = index.emplace(std::move(key), out.size());
    if (inserted) {
      out.push_back({m, 1});
    } else {
      ++out[it->second].multiplicity;
    }
  }
  return out;
}

EquilibriumSet all_nash(const GameInstance& instance, std::span<const StrategyProfile> feasible) {
  EquilibriumSet set;
  for (const StrategyProfile& p : feasible) {
    if (!is_nash(instance, p)) continue;
    set.members.push_back({p, sum_cost(instance, p), max_cost(instance, p), potential(instance, p)});
  }
  return set;
}

EquilibriumSet all_nash(const GameInstance& instance, std::size_t cap) {
  const auto profiles = enumerate_profiles(instance, cap);
  return all_nash(instance, profiles);
}

namespace {

bool is_series_parallel(GraphClass c) { return c == GraphClass::ParallelLink || c == GraphClass::SeriesParallel; }

BoundVerdict lemma_cost_bound(const GameInstance& instance, const EquilibriumSet& equilibria,
                              const Rational& optimum_sum) {
  BoundVerdict v{"Lem3:NE_agent_cost<=opt_sc", "every equilibrium agent cost <= sum-cost optimum",
                 Rational(0), optimum_sum, true, std::nullopt};
  for (const EquilibriumEntry& ne : equilibria.members) {
    for (int j = 0; j < ne.profile.num_agents(); ++j) {
      Rational c = agent_cost(instance, ne.profile, j);
      if (c > v.measured) v.measured = c;
      if (c > optimum_sum && v.holds) {
        v.holds = false;
        v.witness = ne.profile;
      }
    }
  }
  return v;
}

BoundVerdict bound(std::string tag, std::string claim, const Rational& measured, const Rational& limit,
                   const StrategyProfile& witness) {
  const bool holds = measured <= limit;
  return {std::move(tag), std::move(claim), measured, limit, holds,
          holds ? std::nullopt : std::optional<StrategyProfile>(witness)};
}

}  // namespace

BoundVerdict verify_lemma_cost_bound(const GameInstance& instance, std::size_t cap) {
  if (!instance.is_symmetric()) throw NotSymmetric("agent cost bound needs a symmetric game");
  if (!is_series_parallel(classify(instance.graph()))) {
    throw NotSeriesParallel("agent cost bound needs a series-parallel graph");
  }
  const auto profiles = enumerate_profiles(instance, cap);
  const auto opt = optimal_profile(instance, profiles, Criterion::SumCost);
  return lemma_cost_bound(instance, all_nash(instance, profiles), opt.value);
}

bool AnalysisReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const BoundVerdict& v) { return v.holds; });
}

AnalysisReport compute_ratios(const GameInstance& instance, std::size_t cap) {
  const auto profiles = enumerate_profiles(instance, cap);
  auto opt_sc = optimal_profile(instance, profiles, Criterion::SumCost);
  auto opt_mc = optimal_profile(instance, profiles, Criterion::MaxCost);
  auto equilibria = all_nash(instance, profiles);
  if (equilibria.members.empty()) throw InternalAssertion("feasible game without a pure equilibrium");

  const auto by_sum = [](const EquilibriumEntry& a, const EquilibriumEntry& b) { return a.sum_cost < b.sum_cost; };
  const auto by_max = [](const EquilibriumEntry& a, const EquilibriumEntry& b) { return a.max_cost < b.max_cost; };
  const auto& members = equilibria.members;
  const EquilibriumEntry& worst_sc = *std::max_element(members.begin(), members.end(), by_sum);
  const EquilibriumEntry& best_sc = *std::min_element(members.begin(), members.end(), by_sum);
  const EquilibriumEntry& worst_mc = *std::max_element(members.begin(), members.end(), by_max);
  const EquilibriumEntry& best_mc = *std::min_element(members.begin(), members.end(), by_max);

  bool degenerate = false;
  auto ratio = [&degenerate](const Rational& num, const Rational& den) {
    if (!den.is_zero()) return num / den;
    if (num.is_zero()) {
      degenerate = true;
      return Rational(1);
    }
    return Rational::infinity();
  };

  const GraphClass cls = classify(instance.graph());
  const int n = instance.num_agents();
  const Rational agents(n);
  AnalysisReport r{cls,
                   instance.is_symmetric(),
                   n,
                   profiles.size(),
                   opt_sc,
                   opt_mc,
                   equilibria,
                   worst_sc.sum_cost,
                   best_sc.sum_cost,
                   worst_mc.max_cost,
                   best_mc.max_cost,
                   ratio(worst_sc.sum_cost, opt_sc.value),
                   ratio(worst_mc.max_cost, opt_mc.value),
                   ratio(best_sc.sum_cost, opt_sc.value),
                   ratio(best_mc.max_cost, opt_mc.value),
                   false,
                   {}};
  r.degenerate = degenerate;

  r.verdicts.push_back({"Prop1:NE_exists", "a pure Nash equilibrium exists", Rational(1), Rational(1), true,
                        std::nullopt});
  if (r.symmetric) {
    if (is_series_parallel(cls)) {
      r.verdicts.push_back(bound("Thm5:PoA_sc<=n", "PoA under sum-cost <= n on series-parallel graphs", r.poa_sc,
                                 agents, worst_sc.profile));
      r.verdicts.push_back(bound("Thm9:PoA_mc<=n", "PoA under max-cost <= n on series-parallel graphs", r.poa_mc,
                                 agents, worst_mc.profile));
      r.verdicts.push_back(lemma_cost_bound(instance, equilibria, opt_sc.value));
    }
    r.verdicts.push_back(bound("Thm8:PoS_sc<=n", "PoS under sum-cost <= n", r.pos_sc, agents, best_sc.profile));
    r.verdicts.push_back(bound("Thm10:PoS_mc<=n", "PoS under max-cost <= n", r.pos_mc, agents, best_mc.profile));
  } else {
    r.verdicts.push_back(bound("Thm13:PoS_sc<=n", "asymmetric PoS under sum-cost <= n", r.pos_sc, agents,
                               best_sc.profile));
    r.verdicts.push_back(bound("Thm14:PoS_mc<=n^2", "asymmetric PoS under max-cost <= n^2", r.pos_mc,
                               agents * agents, best_mc.profile));
  }
  return r;
}

}  // namespace csglab
