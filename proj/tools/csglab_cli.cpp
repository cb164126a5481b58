// csglab command-line front end: gen, analyze, dynamics, verify.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "csglab/analysis.hpp"
#include "csglab/dynamics.hpp"
#include "csglab/errors.hpp"
#include "csglab/instances.hpp"
#include "csglab/io.hpp"
#include "csglab/verify.hpp"

namespace {

using namespace csglab;
using io::json;

enum Exit { kOk = 0, kVerdict = 1, kInput = 2, kExplosion = 3 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CSGLAB_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && end != env) return v;
    throw ParameterViolation(std::string("CSGLAB_SEED is not an unsigned integer: ") + env);
  }
  return 42;
}

void emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParameterViolation("cannot write \"" + out + "\"");
  f << text;
}

GameInstance load_instance(const std::string& path) { return io::instance_from_json(io::parse_json(io::read_text(path))); }

DeviationPolicy make_policy(const std::string& order, const std::string& rule, const std::vector<int>& permutation,
                            std::uint64_t seed) {
  DeviationPolicy p;
  if (order == "round-robin") {
    p.order = AgentOrder::RoundRobin;
  } else if (order == "fixed") {
    p.order = AgentOrder::FixedPermutation;
    p.permutation = permutation;
  } else if (order == "random") {
    p.order = AgentOrder::SeededRandom;
  } else {
    throw ParameterViolation("unknown policy \"" + order + "\"");
  }
  if (rule == "best") {
    p.rule = ImprovementRule::BestResponse;
  } else if (rule == "first") {
    p.rule = ImprovementRule::FirstImproving;
  } else {
    throw ParameterViolation("unknown rule \"" + rule + "\"");
  }
  p.seed = seed;
  return p;
}

struct GenArgs {
  std::string recipe;
  std::string x = "1", y = "2", eps = "1/100";
  int n = 2;
  std::optional<std::uint64_t> seed;
  std::string family = "mixed";
  int max_edges = 8, max_depth = 4, nodes = 5;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  std::optional<GameInstance> g;
  if (a.recipe == "fig2") {
    g.emplace(fig2_dag(Rational::parse(a.x), Rational::parse(a.y)));
  } else if (a.recipe == "fig3") {
    g.emplace(fig3_parallel(a.n, Rational::parse(a.eps)));
  } else if (a.recipe == "two-link") {
    g.emplace(two_link(a.n));
  } else if (a.recipe == "random-sp") {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = a.n;
    o.max_edges = a.max_edges;
    o.max_depth = a.max_depth;
    o.family = parse_scheme_family(a.family);
    g.emplace(random_sp(o));
  } else if (a.recipe == "random-asym") {
    RandomAsymmetricOptions o;
    o.seed = seed;
    o.agents = a.n;
    o.nodes = a.nodes;
    o.max_edges = a.max_edges;
    o.family = parse_scheme_family(a.family);
    g.emplace(random_asymmetric(o));
  } else {
    throw ParameterViolation("unknown recipe \"" + a.recipe + "\"");
  }
  emit(io::instance_to_json(*g), a.out);
  return kOk;
}

struct AnalyzeArgs {
  std::string in = "-";
  std::string criterion = "both";
  std::size_t cap = kDefaultPathCap;
  bool no_dynamics = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const auto started = std::chrono::steady_clock::now();
  io::ReportOptions options;
  if (a.criterion == "sc") {
    options.max_cost = false;
  } else if (a.criterion == "mc") {
    options.sum_cost = false;
  } else if (a.criterion != "both") {
    throw ParameterViolation("unknown criterion \"" + a.criterion + "\"");
  }
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const GameInstance g = load_instance(a.in);
  const AnalysisReport report = compute_ratios(g, a.cap);
  json doc = io::report_to_json(report, options);
  doc["seeds"] = {{"dynamics", seed}};
  if (!a.no_dynamics) {
    DeviationPolicy policy;
    policy.order = AgentOrder::SeededRandom;
    policy.seed = seed;
    json dyn = {{"from_opt_sc", io::trace_to_json(g, run_dynamics(g, report.optimum_sc.profile, policy))}};
    if (g.is_symmetric()) {
      dyn["constructive"] = io::constructive_to_json(constructive_min_maxcost_ne(g, report.optimum_mc.profile));
    }
    doc["dynamics"] = std::move(dyn);
  }
  bool holds = true;
  for (const auto& v : doc["verdicts"]) holds = holds && v["holds"].get<bool>();
  doc["volatile"] = {
      {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count()}};
  emit(doc, a.out);
  return holds ? kOk : kVerdict;
}

struct DynamicsArgs {
  std::string in = "-";
  std::string start = "opt-sc";
  std::string policy = "round-robin";
  std::string rule = "best";
  std::vector<int> permutation;
  std::optional<std::uint64_t> seed;
  std::size_t cap = kDefaultPathCap;
  std::size_t step_cap = kDefaultStepCap;
  std::string out;
};

int cmd_dynamics(const DynamicsArgs& a) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const GameInstance g = load_instance(a.in);
  std::optional<StrategyProfile> start;
  if (a.start == "opt-sc") {
    start.emplace(optimal_profile(g, Criterion::SumCost, a.cap).profile);
  } else if (a.start == "opt-mc") {
    start.emplace(optimal_profile(g, Criterion::MaxCost, a.cap).profile);
  } else {
    start.emplace(io::profile_from_json(g, io::parse_json(io::read_text(a.start))));
    check_profile(g, *start);
  }
  const DynamicsTrace trace = run_dynamics(g, *start, make_policy(a.policy, a.rule, a.permutation, seed), a.step_cap);
  json doc = io::trace_to_json(g, trace);
  doc["seed"] = seed;
  emit(doc, a.out);
  return doc["terminal_is_nash"].get<bool>() ? kOk : kVerdict;
}

struct VerifyArgs {
  std::string suite = "paper";
  double budget = 60;
  std::optional<std::uint64_t> seed;
  std::size_t cap = kDefaultPathCap;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions options;
  if (a.seed) {
    options.seed = *a.seed;
  } else if (std::getenv("CSGLAB_SEED")) {
    options.seed = default_seed();
  }
  options.cap = a.cap;
  const auto started = std::chrono::steady_clock::now();
  const auto results = run_suite(a.suite, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  print_results(std::cout, results);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  const bool in_budget = seconds <= a.budget;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
            << " criteria passed; seed " << options.seed << "; " << seconds << "s of " << a.budget << "s budget"
            << (in_budget ? "" : " (OVER BUDGET)") << "\n";
  return failed == 0 && in_budget ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacitated cost-sharing connection games: generate, analyze, simulate, verify"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Emit an instance document");
  g->add_option("recipe", gen.recipe, "fig2 | fig3 | two-link | random-sp | random-asym")->required();
  g->add_option("--x", gen.x, "fig2 cost x (rational)");
  g->add_option("--y", gen.y, "fig2 cost y (rational)");
  g->add_option("--n", gen.n, "number of agents");
  g->add_option("--eps", gen.eps, "fig3 epsilon (rational)");
  g->add_option("--seed", gen.seed, "random seed (default CSGLAB_SEED or 42)");
  g->add_option("--family", gen.family, "ordinary | threshold | random-valid | mixed");
  g->add_option("--max-edges", gen.max_edges);
  g->add_option("--max-depth", gen.max_depth);
  g->add_option("--nodes", gen.nodes);
  g->add_option("--out", gen.out, "output path (default stdout)");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Exhaustive analysis report");
  a->add_option("file", an.in, "instance file, or - for stdin");
  a->add_option("--in", an.in, "instance file");
  a->add_option("--criterion", an.criterion, "both | sc | mc");
  a->add_option("--cap", an.cap, "maximum number of paths / profiles enumerated");
  a->add_flag("--no-dynamics", an.no_dynamics, "skip the dynamics and constructive traces");
  a->add_option("--seed", an.seed);
  a->add_option("--out", an.out);

  DynamicsArgs dy;
  auto* d = app.add_subcommand("dynamics", "Run improving-response dynamics");
  d->add_option("file", dy.in, "instance file, or - for stdin");
  d->add_option("--in", dy.in, "instance file");
  d->add_option("--start", dy.start, "opt-sc | opt-mc | profile file");
  d->add_option("--policy", dy.policy, "round-robin | fixed | random");
  d->add_option("--rule", dy.rule, "best | first");
  d->add_option("--permutation", dy.permutation, "agent order for --policy fixed");
  d->add_option("--seed", dy.seed);
  d->add_option("--cap", dy.cap);
  d->add_option("--step-cap", dy.step_cap);
  d->add_option("--out", dy.out);

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Run the acceptance suite");
  v->add_option("--suite", ve.suite, "suite name (paper)");
  v->add_option("--budget", ve.budget, "time budget in seconds");
  v->add_option("--seed", ve.seed);
  v->add_option("--cap", ve.cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*a) return cmd_analyze(an);
    if (*d) return cmd_dynamics(dy);
    return cmd_verify(ve);
  } catch (const PathExplosion& e) {
    std::cerr << "error: " << e.what() << " (count " << e.count() << ")\n";
    return kExplosion;
  } catch (const InternalAssertion& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerdict;
  } catch (const StepCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerdict;
  } catch (const SelfCheckFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerdict;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const io::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
