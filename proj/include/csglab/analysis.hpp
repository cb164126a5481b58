#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csglab/game.hpp"

namespace csglab {

enum class Criterion { SumCost, MaxCost };

std::string_view to_string(Criterion c);
Rational social_cost(const GameInstance& instance, const StrategyProfile& profile, Criterion c);

/// Every feasible profile, agent 0 varying slowest and each agent's paths in
/// lexicographic order. Throws PathExplosion if any agent has more than `cap`
/// paths or the product of the per-agent path counts exceeds `cap`.
std::vector<StrategyProfile> enumerate_profiles(const GameInstance& instance, std::size_t cap = kDefaultPathCap);

struct Optimum {
  StrategyProfile profile;
  Rational value;
};

/// Exhaustive minimizer; the first minimizer in enumeration order wins ties.
Optimum optimal_profile(const GameInstance& instance, Criterion criterion, std::size_t cap = kDefaultPathCap);
Optimum optimal_profile(const GameInstance& instance, std::span<const StrategyProfile> feasible, Criterion criterion);

struct EquilibriumEntry {
  StrategyProfile profile;
  Rational sum_cost;
  Rational max_cost;
  Rational potential;
};

struct EquilibriumClass {
  EquilibriumEntry representative;
  std::size_t multiplicity;
};

struct EquilibriumSet {
  std::vector<EquilibriumEntry> members;

  /// Members grouped by their sorted multiset of paths, in first-seen order.
  std::vector<EquilibriumClass> distinct() const;
};

EquilibriumSet all_nash(const GameInstance& instance, std::size_t cap = kDefaultPathCap);
EquilibriumSet all_nash(const GameInstance& instance, std::span<const StrategyProfile> feasible);

/// Evaluated claim `measured <= bound`, with the offending profile on violation.
struct BoundVerdict {
  std::string tag;
  std::string claim;
  Rational measured;
  Rational bound;
  bool holds;
  std::optional<StrategyProfile> witness;
};

/// Every equilibrium agent pays at most the sum-cost optimum. Needs a
/// symmetric series-parallel game (NotSeriesParallel / NotSymmetric).
BoundVerdict verify_lemma_cost_bound(const GameInstance& instance, std::size_t cap = kDefaultPathCap);

struct AnalysisReport {
  GraphClass graph_class;
  bool symmetric;
  int agents;
  std::size_t feasible_profiles;
  Optimum optimum_sc;
  Optimum optimum_mc;
  EquilibriumSet equilibria;
  Rational worst_ne_sc;
  Rational best_ne_sc;
  Rational worst_ne_mc;
  Rational best_ne_mc;
  Rational poa_sc;
  Rational poa_mc;
  Rational pos_sc;
  Rational pos_mc;
  /// Some optimum is zero and the matching equilibrium cost is zero too;
  /// the affected ratios are reported as 1.
  bool degenerate;
  std::vector<BoundVerdict> verdicts;

  bool all_hold() const;
};

/// Exact PoA/PoS under both criteria plus the upper bounds that apply to the
/// instance's symmetry and graph class. No bound is asserted for the price
/// of anarchy on DAGs or general graphs.
AnalysisReport compute_ratios(const GameInstance& instance, std::size_t cap = kDefaultPathCap);

}  // namespace csglab
