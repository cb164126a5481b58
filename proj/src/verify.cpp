#include "csglab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "csglab/analysis.hpp"
#include "csglab/dynamics.hpp"
#include "csglab/errors.hpp"
#include "csglab/extension.hpp"
#include "csglab/instances.hpp"

namespace csglab {

namespace {

// Records the first failed expectation of a criterion; later checks keep running.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  int checks() const { return checks_; }

 private:
  std::string failure_;
  int checks_ = 0;
};

std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

SchemeFamily family_for(int i) { return static_cast<SchemeFamily>(i % 4); }

RandomSpOptions sp_options(std::uint64_t seed, int agents, int i) {
  RandomSpOptions o;
  o.seed = seed;
  o.agents = agents;
  o.max_edges = 8;
  o.max_depth = 4;
  o.cap_max = agents;
  o.family = family_for(i);
  return o;
}

RandomAsymmetricOptions asym_options(std::uint64_t seed, int agents, int i) {
  RandomAsymmetricOptions o;
  o.seed = seed;
  o.agents = agents;
  o.nodes = 5;
  o.max_edges = 8;
  o.cap_max = agents;
  o.family = family_for(i);
  return o;
}

std::string profile_str(const StrategyProfile& p) {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < p.num_agents(); ++j) {
    os << (j ? "," : "") << "[";
    for (std::size_t k = 0; k < p.path(j).size(); ++k) os << (k ? "," : "") << p.path(j)[k];
    os << "]";
  }
  os << "]";
  return os.str();
}

// --- criterion 1 -----------------------------------------------------------
CriterionResult dag_reproduction(const SuiteOptions& opt) {
  Checker c;
  std::ostringstream measured;
  const std::pair<long, long> points[] = {{1, 2}, {1, 100}, {3, 9}};
  for (auto [xi, yi] : points) {
    const Rational x(xi), y(yi);
    const GameInstance g = fig2_dag(x, y);
    const auto paths = fig2_paths();
    const StrategyProfile bad(g.graph(), {paths.s_a_b_t, paths.s_b_c_t});
    const auto eq = all_nash(g, opt.cap);
    bool found = false;
    for (const auto& m : eq.members) found = found || m.profile == bad;
    c.expect(found, "{sabt, sbct} missing from the enumerated equilibria");

    const auto r = compute_ratios(g, opt.cap);
    const Rational poa_sc = Rational(4, 5) + Rational(2) * y / (Rational(5) * x);
    const Rational poa_mc_floor = Rational(2, 3) + y / (Rational(3) * x);
    c.expect(r.poa_sc == poa_sc, "PoA_sc " + r.poa_sc.str() + " != " + poa_sc.str());
    c.expect(r.poa_mc >= poa_mc_floor, "PoA_mc " + r.poa_mc.str() + " below " + poa_mc_floor.str());
    const bool bad_is_worst = r.worst_ne_mc == max_cost(g, bad);
    c.expect(!bad_is_worst || r.poa_mc == poa_mc_floor, "PoA_mc not equal to the closed form");
    measured << "(" << xi << "," << yi << "):PoA_sc=" << r.poa_sc << ",PoA_mc=" << r.poa_mc << " ";
  }
  Rational previous(0);
  for (long xi : {1L, 10L, 100L}) {
    const Rational x(xi);
    const auto r = compute_ratios(fig2_dag(x, x * x, /*allow_equal=*/true), opt.cap);
    c.expect(r.poa_sc > previous, "PoA_sc not increasing along y = x^2");
    previous = r.poa_sc;
    measured << "x=" << xi << ":" << r.poa_sc << " ";
  }
  c.expect(previous > Rational(40), "PoA_sc at x=100 does not exceed 40");
  return {1, "Thm1,Thm6", "DAG instance: exact PoA formulas and unbounded growth",
          "PoA_sc=4/5+2y/5x; PoA_mc>=2/3+y/3x; PoA_sc(x=100,y=x^2)>40", measured.str(),
          "fig2 (1,2) (1,100) (3,9); y=x^2 at x=1,10,100", c.passed(), c.failure(), 0};
}

// --- criterion 2 -----------------------------------------------------------
CriterionResult parallel_pos_reproduction(const SuiteOptions& opt) {
  Checker c;
  std::ostringstream measured;
  const Rational eps(1, 1000);
  for (int n = 2; n <= 5; ++n) {
    const GameInstance g = fig3_parallel(n, eps);
    const Rational ne_sum = Rational(n - 1) + Rational(1, n);
    const auto r = compute_ratios(g, opt.cap);
    const auto classes = r.equilibria.distinct();
    c.expect(classes.size() == 1, "n=" + std::to_string(n) + ": " + std::to_string(classes.size()) +
                                      " equilibria up to permutation");
    if (!classes.empty()) {
      auto used = classes.front().representative.profile.paths();
      std::sort(used.begin(), used.end());
      std::vector<Path> expected;
      for (int i = 0; i < n; ++i) expected.push_back({i});
      c.expect(used == expected, "n=" + std::to_string(n) + ": equilibrium is not one agent per e_0..e_{n-1}");
      c.expect(classes.front().representative.sum_cost == ne_sum, "equilibrium sum-cost differs from n-1+1/n");
    }
    c.expect(r.optimum_sc.value == Rational(1) + eps, "optimum differs from 1+eps");
    const Rational pos = ne_sum / (Rational(1) + eps);
    c.expect(r.pos_sc == pos, "PoS_sc " + r.pos_sc.str() + " != " + pos.str());
    // eps -> 0: the optimum tends to 1 while the unique equilibrium does not move
    const Rational limit = r.best_ne_sc / Rational(1);
    c.expect(limit == Rational(n) + Rational(1, n) - Rational(1), "limit differs from n+1/n-1");
    measured << "n=" << n << ":PoS_sc=" << r.pos_sc << ",limit=" << limit << " ";
  }
  return {2, "Lem7,Thm8", "Parallel-link PoS lower bound", "unique NE sum n-1+1/n; PoS_sc=(n-1+1/n)/(1+eps)",
          measured.str(), "fig3 n=2..5 eps=1/1000", c.passed(), c.failure(), 0};
}

// --- criterion 3 -----------------------------------------------------------
CriterionResult two_link_reproduction(const SuiteOptions& opt) {
  Checker c;
  std::ostringstream measured;
  for (int n : {2, 5}) {
    const auto r = compute_ratios(two_link(n), opt.cap);
    c.expect(r.poa_sc == Rational(n), "n=" + std::to_string(n) + ": PoA_sc=" + r.poa_sc.str());
    c.expect(r.poa_mc == Rational(n), "n=" + std::to_string(n) + ": PoA_mc=" + r.poa_mc.str());
    measured << "n=" << n << ":PoA_sc=" << r.poa_sc << ",PoA_mc=" << r.poa_mc << " ";
  }
  return {3, "Thm5,Thm9", "Two-link PoA lower bounds", "PoA_sc = PoA_mc = n", measured.str(), "two-link n=2,5",
          c.passed(), c.failure(), 0};
}

// --- criterion 4 -----------------------------------------------------------
CriterionResult symmetric_upper_bounds(const SuiteOptions& opt) {
  Checker c;
  Rational worst_poa_sc(0), worst_poa_mc(0), worst_pos_sc(0), worst_pos_mc(0);
  int instances = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 2;
    const GameInstance g = random_sp(sp_options(opt.seed + static_cast<std::uint64_t>(i), n, i));
    const auto cls = classify(g.graph());
    c.expect(cls == GraphClass::ParallelLink || cls == GraphClass::SeriesParallel, "generated graph not SP");
    c.expect(g.graph().num_edges() <= 8, "generated graph exceeds 8 edges");
    const auto r = compute_ratios(g, opt.cap);
    for (const auto& v : r.verdicts) {
      c.expect(v.holds, "seed " + std::to_string(opt.seed + static_cast<std::uint64_t>(i)) + ": " + v.tag +
                            " violated, measured " + v.measured.str() +
                            (v.witness ? " witness " + profile_str(*v.witness) : ""));
    }
    const Rational bound(n);
    c.expect(r.poa_sc <= bound && r.poa_mc <= bound && r.pos_sc <= bound && r.pos_mc <= bound,
             "ratio above n");
    const auto lemma = verify_lemma_cost_bound(g, opt.cap);
    c.expect(lemma.holds, "equilibrium agent above the sum-cost optimum");
    worst_poa_sc = max(worst_poa_sc, r.poa_sc / bound);
    worst_poa_mc = max(worst_poa_mc, r.poa_mc / bound);
    worst_pos_sc = max(worst_pos_sc, r.pos_sc / bound);
    worst_pos_mc = max(worst_pos_mc, r.pos_mc / bound);
    ++instances;
  }
  std::ostringstream measured;
  measured << "max ratio/n: PoA_sc " << std::setprecision(4) << worst_poa_sc.to_double() << ", PoA_mc "
           << worst_poa_mc.to_double() << ", PoS_sc " << worst_pos_sc.to_double() << ", PoS_mc "
           << worst_pos_mc.to_double();
  return {4, "Thm5,Thm8,Thm9,Thm10,Lem3,Lem6", "Symmetric SP upper bounds",
          "PoA_sc,PoA_mc,PoS_sc,PoS_mc <= n; NE agent cost <= opt_sc", measured.str(),
          std::to_string(instances) + " random SP, n in {2,3}, <=8 edges, mixed schemes", c.passed(), c.failure(), 0};
}

// --- criterion 5 -----------------------------------------------------------
CriterionResult asymmetric_upper_bounds(const SuiteOptions& opt) {
  Checker c;
  Rational worst_sc(0), worst_mc(0);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const auto seed = opt.seed + 10'000 + static_cast<std::uint64_t>(i);
    const GameInstance g = random_asymmetric(asym_options(seed, n, i));
    c.expect(!g.is_symmetric(), "generated instance is symmetric");
    c.expect(classify(g.graph()) == GraphClass::Dag, "generated graph is not classified as a DAG");
    const auto r = compute_ratios(g, opt.cap);
    const Rational bound(n);
    c.expect(r.pos_sc <= bound, "seed " + std::to_string(seed) + ": PoS_sc " + r.pos_sc.str() + " > n");
    c.expect(r.pos_mc <= bound * bound, "seed " + std::to_string(seed) + ": PoS_mc " + r.pos_mc.str() + " > n^2");
    for (const auto& v : r.verdicts) c.expect(v.holds, v.tag + " violated");
    worst_sc = max(worst_sc, r.pos_sc / bound);
    worst_mc = max(worst_mc, r.pos_mc / (bound * bound));
  }
  std::ostringstream measured;
  measured << std::setprecision(4) << "max PoS_sc/n " << worst_sc.to_double() << ", max PoS_mc/n^2 "
           << worst_mc.to_double();
  return {5, "Thm13,Thm14", "Asymmetric PoS upper bounds", "PoS_sc <= n; PoS_mc <= n^2", measured.str(),
          "100 random asymmetric DAGs, n in {2,3}", c.passed(), c.failure(), 0};
}

// --- criterion 6 -----------------------------------------------------------
CriterionResult potential_identities(const SuiteOptions& opt) {
  Checker c;
  std::mt19937_64 rng(opt.seed + 20'000);
  int profiles = 0, deviations = 0, runs = 0;
  for (int i = 0; profiles < 1000 || deviations < 500; ++i) {
    const int n = 2 + i % 2;
    const auto seed = opt.seed + 20'000 + static_cast<std::uint64_t>(i);
    const GameInstance g = i % 3 == 2 ? random_asymmetric(asym_options(seed, n, i)) : random_sp(sp_options(seed, n, i));
    const auto all = enumerate_profiles(g, opt.cap);
    const Rational agents(n);
    for (int k = 0; k < 25 && profiles < 1000; ++k, ++profiles) {
      const StrategyProfile& s = all[draw(rng, all.size())];
      const Rational sc = sum_cost(g, s);
      const Rational phi = potential(g, s);
      c.expect(sc <= phi, "cost_sc > potential");
      c.expect(phi <= agents * sc, "potential > n * cost_sc");
    }
    for (int k = 0; k < 15 && deviations < 500; ++k) {
      const StrategyProfile& s = all[draw(rng, all.size())];
      const int j = static_cast<int>(draw(rng, static_cast<std::size_t>(n)));
      const auto& t = g.terminals(j);
      const auto options = enumerate_st_paths(g.graph(), t.source, t.sink, opt.cap);
      const Path& alt = options[draw(rng, options.size())];
      const StrategyProfile moved = s.with_path(g.graph(), j, alt);
      if (!is_feasible(g, moved)) continue;
      const Rational d_phi = potential(g, moved) - potential(g, s);
      const Rational d_cost = agent_cost(g, moved, j) - agent_cost(g, s, j);
      c.expect(d_phi == d_cost, "potential change " + d_phi.str() + " != cost change " + d_cost.str());
      ++deviations;
    }
    for (int k = 0; k < 3; ++k, ++runs) {
      DeviationPolicy policy;
      policy.order = static_cast<AgentOrder>(draw(rng, 3));
      policy.rule = static_cast<ImprovementRule>(draw(rng, 2));
      policy.seed = rng();
      policy.permutation.resize(static_cast<std::size_t>(n));
      std::iota(policy.permutation.begin(), policy.permutation.end(), 0);
      std::reverse(policy.permutation.begin(), policy.permutation.end());
      const auto trace = run_dynamics(g, all[draw(rng, all.size())], policy);
      c.expect(static_cast<bool>(is_nash(g, trace.terminal)), "dynamics ended outside equilibrium");
      Rational prev = trace.start_potential;
      for (const auto& step : trace.steps) {
        c.expect(step.potential_after < prev, "potential trace not strictly decreasing");
        prev = step.potential_after;
      }
    }
  }
  std::ostringstream measured;
  measured << profiles << " profiles, " << deviations << " deviations, " << runs << " dynamics runs";
  return {6, "Prop1,Lem6", "Potential identities", "cost_sc <= Phi <= n*cost_sc; dPhi = dp_j; dynamics reach NE",
          measured.str(), "random SP and asymmetric instances", c.passed(), c.failure(), 0};
}

// --- criterion 7 -----------------------------------------------------------
CriterionResult constructive_procedure(const SuiteOptions& opt) {
  Checker c;
  std::mt19937_64 rng(opt.seed + 30'000);
  int instances = 0, rounds = 0, rerouted = 0;
  Rational worst(0);
  auto run = [&](const GameInstance& g, const std::string& label, const std::optional<StrategyProfile>& start) {
    const auto opt_mc = optimal_profile(g, Criterion::MaxCost, opt.cap);
    ConstructiveResult result = [&] {
      try {
        return constructive_min_maxcost_ne(g, opt_mc.profile, {}, start);
      } catch (const InternalAssertion& e) {
        throw InternalAssertion(label + ": " + e.what());
      }
    }();
    const Rational bound = Rational(g.num_agents()) * opt_mc.value;
    c.expect(static_cast<bool>(is_nash(g, result.equilibrium)), label + ": result is not an equilibrium");
    c.expect(result.max_cost == max_cost(g, result.equilibrium), label + ": reported max-cost mismatch");
    c.expect(result.max_cost <= sum_cost(g, opt_mc.profile), label + ": max-cost above cost_sc of the optimum");
    c.expect(result.max_cost <= bound, label + ": max-cost " + result.max_cost.str() + " > " + bound.str());
    for (std::size_t k = 1; k < result.equilibrium_potentials.size(); ++k) {
      c.expect(result.equilibrium_potentials[k] < result.equilibrium_potentials[k - 1],
               label + ": outer potentials not strictly decreasing");
    }
    for (const auto& round : result.rounds) {
      c.expect(round.path_base_cost * result.scale <= Rational(g.num_agents()), label + ": p(s') > n after scaling");
      c.expect(round.recombined_potential < round.equilibrium_potential, label + ": recombined potential too high");
      rerouted += round.rerouted ? 1 : 0;
    }
    if (!opt_mc.value.is_zero()) worst = max(worst, result.max_cost / opt_mc.value / Rational(g.num_agents()));
    rounds += static_cast<int>(result.rounds.size());
    ++instances;
  };
  for (int i = 0; i < 50; ++i) {
    const auto seed = opt.seed + 30'000 + static_cast<std::uint64_t>(i);
    run(random_sp(sp_options(seed, 2 + i % 2, i)), "sp seed " + std::to_string(seed), std::nullopt);
  }
  for (int n = 2; n <= 5; ++n) {
    run(two_link(n), "two-link n=" + std::to_string(n), std::nullopt);
    run(fig3_parallel(n, Rational(1, 1000)), "fig3 n=" + std::to_string(n), std::nullopt);
  }
  // Started at the bad equilibrium with y > 3x, both agents pay more than
  // cost_sc of the optimum, so at least one removal round must run.
  int dag_rounds = 0;
  const std::pair<long, long> points[] = {{1, 4}, {1, 10}, {1, 100}, {3, 10}};
  for (auto [x, y] : points) {
    const GameInstance g = fig2_dag(Rational(x), Rational(y));
    const auto paths = fig2_paths();
    const int before = rounds;
    run(g, "fig2 (" + std::to_string(x) + "," + std::to_string(y) + ")",
        StrategyProfile(g.graph(), {paths.s_a_b_t, paths.s_b_c_t}));
    dag_rounds += rounds - before;
  }
  c.expect(dag_rounds >= 4, "DAG instance started at the bad equilibrium ran no removal round");
  // Symmetric games on random DAGs from random starting profiles.
  int dags = 0;
  for (int i = 0; dags < 200; ++i) {
    const int n = 2 + i % 2;
    const auto seed = opt.seed + 35'000 + static_cast<std::uint64_t>(i);
    const GameInstance a = random_asymmetric(asym_options(seed, n, i));
    std::optional<GameInstance> g;
    try {
      g.emplace(GameInstance::symmetric(a.graph(), a.schemes(), n, a.recipe()));
    } catch (const InfeasibleGame&) {
      continue;
    }
    const auto all = enumerate_profiles(*g, opt.cap);
    run(*g, "dag seed " + std::to_string(seed), all[draw(rng, all.size())]);
    ++dags;
  }
  std::ostringstream measured;
  measured << instances << " runs, " << rounds << " outer rounds (" << rerouted << " rerouted), max (max-cost/opt_mc)/n "
           << std::setprecision(4) << worst.to_double();
  return {7, "Thm10", "Constructive low max-cost equilibrium", "NE with max-cost <= n*opt_mc; Phi decreasing",
          measured.str(),
          "50 random SP; two-link, fig3 n=2..5; fig2 from bad NE; 200 symmetric random DAGs from random starts",
          c.passed(), c.failure(), 0};
}

// --- criterion 8 -----------------------------------------------------------
CriterionResult extension_oracle(const SuiteOptions& opt) {
  Checker c;
  std::mt19937_64 rng(opt.seed + 40'000);
  int cases = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const auto seed = opt.seed + 40'000 + static_cast<std::uint64_t>(i);
    const GameInstance g = random_sp(sp_options(seed, n, i));
    const auto all = enumerate_profiles(g, opt.cap);
    const StrategyProfile& larger = all[draw(rng, all.size())];
    StrategyProfile smaller = all[draw(rng, all.size())];
    const int r = static_cast<int>(draw(rng, static_cast<std::size_t>(n)));
    while (smaller.num_agents() > r) {
      smaller = smaller.without(g.graph(), static_cast<int>(draw(rng, static_cast<std::size_t>(smaller.num_agents()))));
    }
    // brute-force set of valid extensions
    std::vector<Path> valid;
    for (const Path& p : enumerate_st_paths(g.graph(), g.graph().source(), g.graph().sink(), opt.cap)) {
      const bool inside = std::all_of(p.begin(), p.end(), [&](EdgeId e) { return larger.load(e) > 0; });
      if (inside && is_feasible(g, smaller.with_extra(g.graph(), p))) valid.push_back(p);
    }
    c.expect(!valid.empty(), "seed " + std::to_string(seed) + ": no valid extension exists");
    try {
      const Path ext = feasible_extension(g, larger, smaller);
      c.expect(std::find(valid.begin(), valid.end(), ext) != valid.end(),
               "seed " + std::to_string(seed) + ": extension outside the brute-force set");
    } catch (const Error& e) {
      c.expect(false, "seed " + std::to_string(seed) + ": " + e.what());
    }
    ++cases;
  }
  return {8, "Lem2", "Feasible extension vs brute force", "extension in E(larger) and combined profile feasible",
          std::to_string(cases) + " cases agree", "100 random SP, n in {2,3}", c.passed(), c.failure(), 0};
}

}  // namespace

std::vector<std::string> suite_names() { return {"paper"}; }

std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name != "paper") throw ParameterViolation("unknown suite \"" + std::string(name) + "\"");
  using Criterion = std::function<CriterionResult(const SuiteOptions&)>;
  const std::pair<int, Criterion> criteria[] = {
      {1, dag_reproduction},       {2, parallel_pos_reproduction}, {3, two_link_reproduction},
      {4, symmetric_upper_bounds}, {5, asymmetric_upper_bounds},   {6, potential_identities},
      {7, constructive_procedure}, {8, extension_oracle},
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn(options);
    } catch (const std::exception& e) {
      r = {id, "", "criterion " + std::to_string(id), "", "", "", false, std::string("error: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

void print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  C" << r.id << " [" << r.tags << "] " << r.title << " | claim: " << r.claimed
       << " | measured: " << r.measured << " | instances: " << r.instances << " | " << std::fixed
       << std::setprecision(2) << r.seconds << "s" << std::defaultfloat;
    if (!r.passed) os << " | " << r.detail;
    os << "\n";
  }
}

}  // namespace csglab
