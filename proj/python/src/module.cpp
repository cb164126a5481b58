#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "csglab/analysis.hpp"
#include "csglab/dynamics.hpp"
#include "csglab/errors.hpp"
#include "csglab/extension.hpp"
#include "csglab/instances.hpp"
#include "csglab/io.hpp"
#include "csglab/verify.hpp"

namespace py = pybind11;
using namespace csglab;

namespace {

// Documents cross the boundary as JSON text; the Python wrapper turns them into dicts.
GameInstance instance_of(const std::string& doc) { return io::instance_from_json(io::parse_json(doc)); }

StrategyProfile profile_of(const GameInstance& g, const std::vector<Path>& paths) {
  StrategyProfile p(g.graph(), paths);
  check_profile(g, p);
  return p;
}

std::string dump(const io::json& j) { return j.dump(); }

DeviationPolicy policy_of(const std::string& order, const std::string& rule, std::uint64_t seed,
                          const std::vector<int>& permutation) {
  DeviationPolicy p;
  if (order == "round-robin") p.order = AgentOrder::RoundRobin;
  else if (order == "fixed") p.order = AgentOrder::FixedPermutation;
  else if (order == "random") p.order = AgentOrder::SeededRandom;
  else throw ParameterViolation("unknown policy \"" + order + "\"");
  if (rule == "best") p.rule = ImprovementRule::BestResponse;
  else if (rule == "first") p.rule = ImprovementRule::FirstImproving;
  else throw ParameterViolation("unknown rule \"" + rule + "\"");
  p.seed = seed;
  p.permutation = permutation;
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of capacitated cost-sharing connection games";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterViolation>(m, "ParameterViolation", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<InfeasibleGame>(m, "InfeasibleGame", error);
  py::register_exception<InfeasibleProfile>(m, "InfeasibleProfile", error);
  py::register_exception<PathExplosion>(m, "PathExplosion", error);
  py::register_exception<InternalAssertion>(m, "InternalAssertion", error);

  m.def("gen_fig2", [](const std::string& x, const std::string& y) {
    return dump(io::instance_to_json(fig2_dag(Rational::parse(x), Rational::parse(y))));
  });
  m.def("gen_fig3", [](int n, const std::string& eps) {
    return dump(io::instance_to_json(fig3_parallel(n, Rational::parse(eps))));
  });
  m.def("gen_two_link", [](int n) { return dump(io::instance_to_json(two_link(n))); });
  m.def(
      "gen_random_sp",
      [](std::uint64_t seed, int n, int max_edges, int max_depth, const std::string& family) {
        RandomSpOptions o;
        o.seed = seed;
        o.agents = n;
        o.max_edges = max_edges;
        o.max_depth = max_depth;
        o.family = parse_scheme_family(family);
        return dump(io::instance_to_json(random_sp(o)));
      },
      py::arg("seed"), py::arg("n"), py::arg("max_edges") = 8, py::arg("max_depth") = 4,
      py::arg("family") = "mixed");
  m.def(
      "gen_random_asym",
      [](std::uint64_t seed, int n, int nodes, int max_edges, const std::string& family) {
        RandomAsymmetricOptions o;
        o.seed = seed;
        o.agents = n;
        o.nodes = nodes;
        o.max_edges = max_edges;
        o.family = parse_scheme_family(family);
        return dump(io::instance_to_json(random_asymmetric(o)));
      },
      py::arg("seed"), py::arg("n"), py::arg("nodes") = 5, py::arg("max_edges") = 10, py::arg("family") = "mixed");

  m.def("normalize", [](const std::string& doc) { return dump(io::instance_to_json(instance_of(doc))); });
  m.def("classify", [](const std::string& doc) { return std::string(to_string(classify(instance_of(doc).graph()))); });

  m.def("agent_cost", [](const std::string& doc, const std::vector<Path>& paths, int agent) {
    const auto g = instance_of(doc);
    return agent_cost(g, profile_of(g, paths), agent).str();
  });
  m.def("sum_cost", [](const std::string& doc, const std::vector<Path>& paths) {
    const auto g = instance_of(doc);
    return sum_cost(g, profile_of(g, paths)).str();
  });
  m.def("max_cost", [](const std::string& doc, const std::vector<Path>& paths) {
    const auto g = instance_of(doc);
    return max_cost(g, profile_of(g, paths)).str();
  });
  m.def("potential", [](const std::string& doc, const std::vector<Path>& paths) {
    const auto g = instance_of(doc);
    return potential(g, profile_of(g, paths)).str();
  });
  m.def("is_nash", [](const std::string& doc, const std::vector<Path>& paths) {
    const auto g = instance_of(doc);
    return static_cast<bool>(is_nash(g, profile_of(g, paths)));
  });
  m.def("best_response", [](const std::string& doc, const std::vector<Path>& paths, int agent) {
    const auto g = instance_of(doc);
    const auto d = best_response(g, profile_of(g, paths), agent);
    return d ? std::optional<Path>(d->path) : std::nullopt;
  });

  m.def(
      "analyze",
      [](const std::string& doc, std::size_t cap) { return dump(io::report_to_json(compute_ratios(instance_of(doc), cap))); },
      py::arg("doc"), py::arg("cap") = kDefaultPathCap);
  m.def(
      "dynamics",
      [](const std::string& doc, const std::optional<std::vector<Path>>& start, const std::string& order,
         const std::string& rule, std::uint64_t seed, const std::vector<int>& permutation, std::size_t cap) {
        const auto g = instance_of(doc);
        const StrategyProfile s =
            start ? profile_of(g, *start) : optimal_profile(g, Criterion::SumCost, cap).profile;
        return dump(io::trace_to_json(g, run_dynamics(g, s, policy_of(order, rule, seed, permutation))));
      },
      py::arg("doc"), py::arg("start") = std::nullopt, py::arg("policy") = "round-robin", py::arg("rule") = "best",
      py::arg("seed") = 0, py::arg("permutation") = std::vector<int>{}, py::arg("cap") = kDefaultPathCap);
  m.def(
      "constructive",
      [](const std::string& doc, std::size_t cap) {
        const auto g = instance_of(doc);
        return dump(io::constructive_to_json(
            constructive_min_maxcost_ne(g, optimal_profile(g, Criterion::MaxCost, cap).profile)));
      },
      py::arg("doc"), py::arg("cap") = kDefaultPathCap);
  m.def("feasible_extension", [](const std::string& doc, const std::vector<Path>& larger,
                                 const std::vector<Path>& smaller) {
    const auto g = instance_of(doc);
    return feasible_extension(g, StrategyProfile(g.graph(), larger), StrategyProfile(g.graph(), smaller));
  });

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        SuiteOptions o;
        o.seed = seed;
        py::list out;
        for (const auto& r : run_suite(suite, o)) {
          py::dict d;
          d["id"] = r.id;
          d["tags"] = r.tags;
          d["title"] = r.title;
          d["claimed"] = r.claimed;
          d["measured"] = r.measured;
          d["instances"] = r.instances;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "paper", py::arg("seed") = SuiteOptions{}.seed);
}
