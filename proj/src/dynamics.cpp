#include "csglab/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "csglab/errors.hpp"

namespace csglab {

namespace {

// Cost agent would pay on edge e after switching, or nullopt if e is full.
std::optional<Rational> deviation_weight(const GameInstance& instance, const StrategyProfile& profile,
                                         const std::vector<bool>& own, EdgeId e) {
  const auto& scheme = instance.scheme(e);
  const int x = profile.load(e);
  if (own[static_cast<std::size_t>(e)]) return scheme.share(x);
  if (x >= scheme.capacity()) return std::nullopt;
  return scheme.share(x + 1);
}

std::vector<bool> own_edges(const GameInstance& instance, const StrategyProfile& profile, int agent) {
  std::vector<bool> own(static_cast<std::size_t>(instance.graph().num_edges()), false);
  for (EdgeId e : profile.path(agent)) own[static_cast<std::size_t>(e)] = true;
  return own;
}

void require_feasible(const GameInstance& instance, const StrategyProfile& profile) {
  check_profile(instance, profile);
  if (!is_feasible(instance, profile)) throw InfeasibleProfile("profile violates edge capacities");
}

}  // namespace

std::optional<Deviation> best_response(const GameInstance& instance, const StrategyProfile& profile, int agent) {
  const Graph& g = instance.graph();
  const Terminals& term = instance.terminals(agent);
  const auto own = own_edges(instance, profile, agent);
  const Rational current = agent_cost(instance, profile, agent);

  const auto n = static_cast<std::size_t>(g.num_nodes());
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::optional<EdgeId>> pred(n);
  std::vector<bool> done(n, false);
  dist[static_cast<std::size_t>(term.source)] = Rational(0);

  for (;;) {
    std::optional<NodeId> u;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (done[vi] || !dist[vi]) continue;
      if (!u || *dist[vi] < *dist[static_cast<std::size_t>(*u)]) u = v;
    }
    if (!u || *u == term.sink) break;
    done[static_cast<std::size_t>(*u)] = true;
    for (EdgeId e : g.out_edges(*u)) {
      auto w = deviation_weight(instance, profile, own, e);
      if (!w) continue;
      const auto h = static_cast<std::size_t>(g.edge(e).head);
      if (done[h]) continue;
      Rational candidate = *dist[static_cast<std::size_t>(*u)] + *w;
      if (!dist[h] || candidate < *dist[h]) {
        dist[h] = std::move(candidate);
        pred[h] = e;
      }
    }
  }

  const auto t = static_cast<std::size_t>(term.sink);
  if (!dist[t]) throw InternalAssertion("best response found no feasible path although the current one is");
  if (!(*dist[t] < current)) return std::nullopt;

  Path path;
  for (NodeId v = term.sink; v != term.source;) {
    const EdgeId e = *pred[static_cast<std::size_t>(v)];
    path.push_back(e);
    v = g.edge(e).tail;
  }
  std::reverse(path.begin(), path.end());
  return Deviation{agent, std::move(path), current, *dist[t]};
}

std::optional<Deviation> first_improving_response(const GameInstance& instance, const StrategyProfile& profile,
                                                  int agent, std::size_t path_cap) {
  const Terminals& term = instance.terminals(agent);
  const auto own = own_edges(instance, profile, agent);
  const Rational current = agent_cost(instance, profile, agent);
  for (Path& p : enumerate_st_paths(instance.graph(), term.source, term.sink, path_cap)) {
    Rational cost;
    bool usable = true;
    for (EdgeId e : p) {
      auto w = deviation_weight(instance, profile, own, e);
      if (!w) {
        usable = false;
        break;
      }
      cost += *w;
    }
    if (usable && cost < current) return Deviation{agent, std::move(p), current, cost};
  }
  return std::nullopt;
}

DynamicsTrace run_dynamics(const GameInstance& instance, const StrategyProfile& start, const DeviationPolicy& policy,
                           std::size_t step_cap) {
  require_feasible(instance, start);
  const int n = instance.num_agents();
  const Graph& g = instance.graph();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (policy.order == AgentOrder::FixedPermutation) {
    auto sorted = policy.permutation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) throw ParameterViolation("deviation order is not a permutation of the agents");
    order = policy.permutation;
  }
  std::mt19937_64 rng(policy.seed);

  DynamicsTrace trace{start, potential(instance, start), {}, start};
  StrategyProfile& profile = trace.terminal;
  Rational phi = trace.start_potential;

  for (bool moved = true; moved;) {
    moved = false;
    if (policy.order == AgentOrder::SeededRandom) {
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[static_cast<std::size_t>(rng() % i)]);
      }
    }
    for (int j : order) {
      auto dev = policy.rule == ImprovementRule::BestResponse ? best_response(instance, profile, j)
                                                              : first_improving_response(instance, profile, j);
      if (!dev) continue;
      if (trace.steps.size() >= step_cap) {
        throw StepCapExceeded("dynamics exceeded " + std::to_string(step_cap) + " steps");
      }
      StrategyProfile next = profile.with_path(g, j, dev->path);
      Rational next_phi = potential(instance, next);
      const Rational realized = agent_cost(instance, next, j);
      if (realized != dev->new_cost || phi - next_phi != dev->old_cost - dev->new_cost) {
        throw InternalAssertion("potential change " + (phi - next_phi).str() + " differs from cost change " +
                                (dev->old_cost - realized).str());
      }
      if (!(next_phi < phi)) throw InternalAssertion("potential did not strictly decrease");
      trace.steps.push_back({j, profile.path(j), dev->path, dev->old_cost, dev->new_cost, next_phi});
      profile = std::move(next);
      phi = std::move(next_phi);
      moved = true;
    }
  }
  return trace;
}

ConstructiveResult constructive_min_maxcost_ne(const GameInstance& instance, const StrategyProfile& optimum_mc,
                                               const DeviationPolicy& policy,
                                               const std::optional<StrategyProfile>& start) {
  if (!instance.is_symmetric()) throw NotSymmetric("constructive procedure needs a symmetric game");
  require_feasible(instance, optimum_mc);
  if (start) require_feasible(instance, *start);
  const Graph& g = instance.graph();
  const int n = instance.num_agents();
  const Rational agents(n);

  const Rational optimum_sum = sum_cost(instance, optimum_mc);
  const Rational scale = optimum_sum.sign() > 0 ? agents / optimum_sum : Rational(1);
  const GameInstance work = instance.scaled(scale);

  ConstructiveResult result{run_dynamics(work, start ? *start : optimum_mc, policy).terminal, {}, scale, {}, {}};
  StrategyProfile& s = result.equilibrium;
  Rational phi = potential(work, s);
  result.equilibrium_potentials.push_back(phi / scale);

  while (max_cost(work, s) > agents) {
    const Rational worst = max_cost(work, s);
    int removed = 0;
    while (agent_cost(work, s, removed) != worst) ++removed;

    const StrategyProfile rest = s.without(g, removed);
    const Rational rest_phi = potential(work, rest);
    if (rest_phi != phi - worst) throw InternalAssertion("removing the max payer did not lower the potential by its cost");

    std::vector<long> combined_cap(static_cast<std::size_t>(g.num_edges()));
    Flow flow{std::vector<long>(combined_cap.size()), n - 1};
    for (std::size_t e = 0; e < combined_cap.size(); ++e) {
      const auto id = static_cast<EdgeId>(e);
      combined_cap[e] = std::max(optimum_mc.load(id), rest.load(id));
      flow.edge_flow[e] = rest.load(id);
    }
    const auto aug = augmenting_path(g, combined_cap, flow, g.source(), g.sink());
    if (!aug) throw InternalAssertion("combined network has no augmenting path");

    Rational path_cost;
    bool forward_only = true;
    for (const ResidualArc& arc : *aug) {
      if (!arc.forward) {
        forward_only = false;
        continue;
      }
      if (optimum_mc.load(arc.edge) == 0) throw InternalAssertion("augmenting path leaves the optimum's edges");
      path_cost += work.base_cost(arc.edge);
    }
    if (path_cost > agents) throw InternalAssertion("augmenting path base cost " + path_cost.str() + " exceeds n");

    std::vector<Path> paths;
    if (forward_only) {
      paths = s.paths();
      paths[static_cast<std::size_t>(removed)].clear();
      for (const ResidualArc& arc : *aug) paths[static_cast<std::size_t>(removed)].push_back(arc.edge);
    } else {
      augment(flow, *aug);
      paths = decompose_flow(g, flow, g.source(), g.sink());
      if (paths.size() != static_cast<std::size_t>(n)) throw InternalAssertion("flow decomposition lost a unit");
    }
    const StrategyProfile recombined(g, std::move(paths));
    if (!is_feasible(work, recombined)) throw InternalAssertion("recombined profile is infeasible");
    const Rational recombined_phi = potential(work, recombined);
    if (recombined_phi > rest_phi + path_cost || !(recombined_phi < phi)) {
      throw InternalAssertion("recombined potential " + recombined_phi.str() + " not below " + phi.str());
    }

    StrategyProfile next = run_dynamics(work, recombined, policy).terminal;
    Rational next_phi = potential(work, next);
    if (!(next_phi < phi)) throw InternalAssertion("outer-round potential did not strictly decrease");

    result.rounds.push_back({worst / scale, phi / scale, removed, *aug, !forward_only, path_cost / scale,
                             recombined_phi / scale});
    result.equilibrium_potentials.push_back(next_phi / scale);
    s = std::move(next);
    phi = std::move(next_phi);
  }
  result.max_cost = max_cost(instance, s);
  return result;
}

}  // namespace csglab
