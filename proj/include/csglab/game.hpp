#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csglab/graph.hpp"
#include "csglab/rational.hpp"

namespace csglab {

// ---------------------------------------------------------------------------
// Cost-sharing schemes
// ---------------------------------------------------------------------------

/// Per-edge share table f(1..capacity) together with the base cost p.
///
/// f(x) is what each of the x agents on the edge pays. The table is only
/// defined up to capacity; evaluation beyond it is a caller bug.
class CostSharingScheme {
 public:
  CostSharingScheme(Rational base_cost, int capacity, std::vector<Rational> shares);

  const Rational& base_cost() const noexcept { return base_cost_; }
  int capacity() const noexcept { return capacity_; }
  std::span<const Rational> shares() const noexcept { return shares_; }

  /// f(load), 1 <= load <= capacity.
  const Rational& share(int load) const;
  /// f(1) + ... + f(load), 0 <= load <= capacity.
  const Rational& cumulative(int load) const;

  /// True iff the table is exactly p/x.
  bool is_ordinary() const;
  /// Every table entry and the base cost multiplied by a positive factor.
  CostSharingScheme scaled(const Rational& factor) const;

  friend bool operator==(const CostSharingScheme&, const CostSharingScheme&) = default;

 private:
  Rational base_cost_;
  int capacity_;
  std::vector<Rational> shares_;
  std::vector<Rational> prefix_;
};

enum class SchemeProperty {
  NonIncreasing,   // f(x) >= f(x+1)
  FairShareFloor,  // f(x) >= p/x
  FullCostAlone,   // f(1) = p
  AtMostBase,      // f(x) <= p            (implied)
  CoversBase,      // x * f(x) >= p        (implied)
  Shape,           // table length / signs
};

std::string_view to_string(SchemeProperty p);

struct SchemeViolation {
  SchemeProperty property;
  int load;
  std::string message;
};

/// Empty iff all share-table properties hold at every index.
std::vector<SchemeViolation> validate_scheme(const CostSharingScheme& scheme);

CostSharingScheme make_ordinary_scheme(const Rational& base_cost, int capacity);

/// f(x) = p below `full_share_at`, p/x from there on. Throws ParameterViolation
/// on a bad threshold and SchemeViolationError if the table fails validation.
CostSharingScheme make_threshold_scheme(const Rational& base_cost, int capacity, int full_share_at);

// ---------------------------------------------------------------------------
// Instances and profiles
// ---------------------------------------------------------------------------

struct Terminals {
  NodeId source;
  NodeId sink;

  friend bool operator==(const Terminals&, const Terminals&) = default;
};

/// Provenance of a generated instance: recipe kind plus its parameters as
/// text, sorted by key.
struct Recipe {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Capacitated cost-sharing connection game.
///
/// Construction validates every scheme against its edge and certifies that at
/// least one feasible profile exists: by max-flow for symmetric games, by
/// exhaustive search otherwise. Throws SchemeViolationError / InfeasibleGame.
class GameInstance {
 public:
  GameInstance(Graph graph, std::vector<CostSharingScheme> schemes, std::vector<Terminals> agents,
               std::optional<Recipe> recipe = std::nullopt);

  /// n agents all routing from graph.source() to graph.sink().
  static GameInstance symmetric(Graph graph, std::vector<CostSharingScheme> schemes, int agents,
                                std::optional<Recipe> recipe = std::nullopt);

  const Graph& graph() const noexcept { return graph_; }
  int num_agents() const noexcept { return static_cast<int>(agents_.size()); }
  const Terminals& terminals(int agent) const { return agents_.at(static_cast<std::size_t>(agent)); }
  const std::vector<Terminals>& agents() const noexcept { return agents_; }
  bool is_symmetric() const noexcept;

  const CostSharingScheme& scheme(EdgeId e) const { return schemes_.at(static_cast<std::size_t>(e)); }
  const std::vector<CostSharingScheme>& schemes() const noexcept { return schemes_; }
  int capacity(EdgeId e) const { return scheme(e).capacity(); }
  const Rational& base_cost(EdgeId e) const { return scheme(e).base_cost(); }
  std::vector<long> capacities() const;

  const std::optional<Recipe>& recipe() const noexcept { return recipe_; }

  /// Copy with every cost multiplied by `factor` > 0.
  GameInstance scaled(const Rational& factor) const;

 private:
  struct Unchecked {};
  GameInstance(Unchecked, Graph graph, std::vector<CostSharingScheme> schemes, std::vector<Terminals> agents,
               std::optional<Recipe> recipe);

  Graph graph_;
  std::vector<CostSharingScheme> schemes_;
  std::vector<Terminals> agents_;
  std::optional<Recipe> recipe_;
};

/// One path per agent plus the induced edge loads.
///
/// Only the path shape is checked here (each path is a simple directed path);
/// matching paths to an instance's terminals is check_profile's job. Profiles
/// with fewer agents than the game model partial profiles such as s_{-i}.
class StrategyProfile {
 public:
  StrategyProfile(const Graph& graph, std::vector<Path> paths);

  int num_agents() const noexcept { return static_cast<int>(paths_.size()); }
  const Path& path(int agent) const { return paths_.at(static_cast<std::size_t>(agent)); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  int load(EdgeId e) const { return loads_.at(static_cast<std::size_t>(e)); }
  std::span<const int> loads() const noexcept { return loads_; }
  bool uses(int agent, EdgeId e) const;

  /// Same profile with agent's path replaced.
  StrategyProfile with_path(const Graph& graph, int agent, Path path) const;
  /// Partial profile with agent removed.
  StrategyProfile without(const Graph& graph, int agent) const;
  /// Partial profile with `path` appended as a new last agent.
  StrategyProfile with_extra(const Graph& graph, Path path) const;

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) { return a.paths_ == b.paths_; }

 private:
  std::vector<Path> paths_;
  std::vector<int> loads_;
};

/// Throws std::invalid_argument unless the profile has one simple path per
/// agent of `instance`, each joining that agent's terminals.
void check_profile(const GameInstance& instance, const StrategyProfile& profile);

bool is_feasible(const GameInstance& instance, const StrategyProfile& profile);

/// Sum of f_e(x_e) over agent's path, or infinity if any of its edges is overloaded.
Rational agent_cost(const GameInstance& instance, const StrategyProfile& profile, int agent);
Rational sum_cost(const GameInstance& instance, const StrategyProfile& profile);
/// Zero for a profile without agents.
Rational max_cost(const GameInstance& instance, const StrategyProfile& profile);

/// Sum over edges of f_e(1) + ... + f_e(x_e). Accepts partial profiles.
/// Throws InfeasibleProfile if a load exceeds capacity.
Rational potential(const GameInstance& instance, const StrategyProfile& profile);

/// A strictly improving unilateral move.
struct Deviation {
  int agent;
  Path path;
  Rational old_cost;
  Rational new_cost;
};

struct NashCheck {
  bool is_nash;
  std::optional<Deviation> witness;

  explicit operator bool() const noexcept { return is_nash; }
};

/// Scans agents in index order and reports the first one whose best response
/// strictly improves. Throws InfeasibleProfile on infeasible input.
NashCheck is_nash(const GameInstance& instance, const StrategyProfile& profile);

}  // namespace csglab
