#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "csglab/game.hpp"

namespace csglab {

/// Minimum-cost feasible path for `agent` with everybody else fixed.
///
/// Shortest path over edge weights f_e(x_e) on the agent's own edges,
/// f_e(x_e + 1) on other edges with spare capacity; full foreign edges are
/// forbidden. Nullopt ("unchanged") unless the result is strictly cheaper
/// than the current path.
std::optional<Deviation> best_response(const GameInstance& instance, const StrategyProfile& profile, int agent);

/// First strictly improving path in lexicographic edge-id order.
std::optional<Deviation> first_improving_response(const GameInstance& instance, const StrategyProfile& profile,
                                                  int agent, std::size_t path_cap = kDefaultPathCap);

enum class AgentOrder { RoundRobin, FixedPermutation, SeededRandom };
enum class ImprovementRule { BestResponse, FirstImproving };

struct DeviationPolicy {
  AgentOrder order = AgentOrder::RoundRobin;
  ImprovementRule rule = ImprovementRule::BestResponse;
  /// Used with FixedPermutation; must be a permutation of 0..n-1.
  std::vector<int> permutation;
  /// Used with SeededRandom; each round draws a fresh order.
  std::uint64_t seed = 0;
};

struct DynamicsStep {
  int agent;
  Path old_path;
  Path new_path;
  Rational old_cost;
  Rational new_cost;
  Rational potential_after;
};

struct DynamicsTrace {
  StrategyProfile start;
  Rational start_potential;
  std::vector<DynamicsStep> steps;
  StrategyProfile terminal;

  std::size_t step_count() const noexcept { return steps.size(); }
};

inline constexpr std::size_t kDefaultStepCap = 1'000'000;

/// Improving-response dynamics until no agent can strictly improve.
///
/// Every executed move is checked against the exact potential identity
/// Phi(before) - Phi(after) = cost_before - cost_after (InternalAssertion on
/// mismatch). Throws StepCapExceeded past `step_cap` moves.
DynamicsTrace run_dynamics(const GameInstance& instance, const StrategyProfile& start,
                           const DeviationPolicy& policy = {}, std::size_t step_cap = kDefaultStepCap);

// ---------------------------------------------------------------------------
// Constructive low max-cost equilibrium
// ---------------------------------------------------------------------------

/// One outer round: the equilibrium it started from, the agent removed, and
/// how that agent was re-inserted through the combined residual network.
/// All costs are in the caller's (unscaled) units.
struct ConstructiveRound {
  Rational equilibrium_max_cost;
  Rational equilibrium_potential;
  int removed_agent;
  ResidualPath augmenting_path;
  /// True when the augmenting path used backward arcs and the combined flow
  /// had to be re-decomposed into paths.
  bool rerouted;
  /// Base-cost sum over the forward arcs of the augmenting path.
  Rational path_base_cost;
  Rational recombined_potential;
};

struct ConstructiveResult {
  StrategyProfile equilibrium;
  Rational max_cost;
  /// Factor that made cost_sc(optimum) equal the agent count.
  Rational scale;
  /// Potential of every equilibrium visited, in order; strictly decreasing.
  std::vector<Rational> equilibrium_potentials;
  std::vector<ConstructiveRound> rounds;
};

/// Starting from a max-cost optimum, alternates dynamics with removal of a
/// maximum-paying agent and re-insertion along an augmenting path of the
/// combined network, until the equilibrium's max-cost is at most n times the
/// optimum's. Ties among maximum payers go to the lowest index. Throws
/// NotSymmetric, and InternalAssertion if a step invariant fails.
///
/// The first dynamics run starts at `start` when given, else at the optimum.
/// The round invariants only rely on the optimum's edges, so any feasible
/// start works.
ConstructiveResult constructive_min_maxcost_ne(const GameInstance& instance, const StrategyProfile& optimum_mc,
                                               const DeviationPolicy& policy = {},
                                               const std::optional<StrategyProfile>& start = std::nullopt);

}  // namespace csglab
