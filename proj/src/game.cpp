#include "csglab/game.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "csglab/dynamics.hpp"
#include "csglab/errors.hpp"

namespace csglab {

CostSharingScheme::CostSharingScheme(Rational base_cost, int capacity, std::vector<Rational> shares)
    : base_cost_(std::move(base_cost)), capacity_(capacity), shares_(std::move(shares)) {
  if (capacity_ < 0) throw std::invalid_argument("negative capacity");
  if (shares_.size() != static_cast<std::size_t>(capacity_)) {
    throw std::invalid_argument("share table has " + std::to_string(shares_.size()) + " entries for capacity " +
                                std::to_string(capacity_));
  }
  if (base_cost_.is_infinite()) throw std::invalid_argument("infinite base cost");
  prefix_.reserve(shares_.size() + 1);
  prefix_.emplace_back(0);
  for (const Rational& f : shares_) {
    if (f.is_infinite()) throw std::invalid_argument("infinite share");
    prefix_.push_back(prefix_.back() + f);
  }
}

const Rational& CostSharingScheme::share(int load) const {
  if (load < 1 || load > capacity_) {
    throw std::out_of_range("share f(" + std::to_string(load) + ") outside 1.." + std::to_string(capacity_));
  }
  return shares_[static_cast<std::size_t>(load - 1)];
}

const Rational& CostSharingScheme::cumulative(int load) const {
  if (load < 0 || load > capacity_) throw std::out_of_range("cumulative share beyond capacity");
  return prefix_[static_cast<std::size_t>(load)];
}

bool CostSharingScheme::is_ordinary() const {
  for (int x = 1; x <= capacity_; ++x) {
    if (share(x) != base_cost_ / Rational(x)) return false;
  }
  return true;
}

CostSharingScheme CostSharingScheme::scaled(const Rational& factor) const {
  if (factor.is_infinite() || factor.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Rational> table;
  table.reserve(shares_.size());
  for (const Rational& f : shares_) table.push_back(f * factor);
  return CostSharingScheme(base_cost_ * factor, capacity_, std::move(table));
}

std::string_view to_string(SchemeProperty p) {
  switch (p) {
    case SchemeProperty::NonIncreasing:
      return "(1) non-increasing";
    case SchemeProperty::FairShareFloor:
      return "(2) f(x) >= p/x";
    case SchemeProperty::FullCostAlone:
      return "(3) f(1) = p";
    case SchemeProperty::AtMostBase:
      return "(3') f(x) <= p";
    case SchemeProperty::CoversBase:
      return "(2') x*f(x) >= p";
    case SchemeProperty::Shape:
      return "shape";
  }
  return "shape";
}

std::vector<SchemeViolation> validate_scheme(const CostSharingScheme& scheme) {
  std::vector<SchemeViolation> out;
  const Rational& p = scheme.base_cost();
  auto report = [&](SchemeProperty prop, int x, const std::string& detail) {
    std::ostringstream msg;
    msg << to_string(prop) << " violated at x=" << x << ": " << detail;
    out.push_back({prop, x, msg.str()});
  };
  if (p.sign() < 0) report(SchemeProperty::Shape, 0, "negative base cost " + p.str());
  const int c = scheme.capacity();
  if (c >= 1 && scheme.share(1) != p) {
    report(SchemeProperty::FullCostAlone, 1, "f(1)=" + scheme.share(1).str() + " but p=" + p.str());
  }
  for (int x = 1; x <= c; ++x) {
    const Rational& f = scheme.share(x);
    if (x < c && f < scheme.share(x + 1)) {
      report(SchemeProperty::NonIncreasing, x, "f(" + std::to_string(x) + ")=" + f.str() + " < f(" +
                                                   std::to_string(x + 1) + ")=" + scheme.share(x + 1).str());
    }
    const Rational floor = p / Rational(x);
    if (f < floor) report(SchemeProperty::FairShareFloor, x, f.str() + " < " + floor.str());
    if (f > p) report(SchemeProperty::AtMostBase, x, f.str() + " > " + p.str());
    if (f * Rational(x) < p) report(SchemeProperty::CoversBase, x, (f * Rational(x)).str() + " < " + p.str());
  }
  return out;
}

CostSharingScheme make_ordinary_scheme(const Rational& base_cost, int capacity) {
  if (base_cost.is_infinite() || base_cost.sign() < 0) throw ParameterViolation("base cost must be >= 0");
  if (capacity < 0) throw ParameterViolation("capacity must be >= 0");
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(capacity));
  for (int x = 1; x <= capacity; ++x) table.push_back(base_cost / Rational(x));
  return CostSharingScheme(base_cost, capacity, std::move(table));
}

CostSharingScheme make_threshold_scheme(const Rational& base_cost, int capacity, int full_share_at) {
  if (base_cost.is_infinite() || base_cost.sign() < 0) throw ParameterViolation("base cost must be >= 0");
  if (full_share_at < 1 || full_share_at > capacity) {
    throw ParameterViolation("threshold " + std::to_string(full_share_at) + " outside 1.." +
                             std::to_string(capacity));
  }
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(capacity));
  for (int x = 1; x <= capacity; ++x) {
    table.push_back(x < full_share_at ? base_cost : base_cost / Rational(x));
  }
  CostSharingScheme scheme(base_cost, capacity, std::move(table));
  if (auto v = validate_scheme(scheme); !v.empty()) throw SchemeViolationError(v.front().message);
  return scheme;
}

// ---------------------------------------------------------------------------

namespace {

bool has_feasible_profile(const Graph& graph, const std::vector<CostSharingScheme>& schemes,
                          const std::vector<Terminals>& agents) {
  std::vector<std::vector<Path>> options;
  options.reserve(agents.size());
  for (const Terminals& t : agents) options.push_back(enumerate_st_paths(graph, t.source, t.sink));
  std::vector<int> load(schemes.size(), 0);

  auto search = [&](auto&& self, std::size_t agent) -> bool {
    if (agent == agents.size()) return true;
    for (const Path& p : options[agent]) {
      const bool fits = std::all_of(p.begin(), p.end(), [&](EdgeId e) {
        return load[static_cast<std::size_t>(e)] < schemes[static_cast<std::size_t>(e)].capacity();
      });
      if (!fits) continue;
      for (EdgeId e : p) ++load[static_cast<std::size_t>(e)];
      const bool found = self(self, agent + 1);
      for (EdgeId e : p) --load[static_cast<std::size_t>(e)];
      if (found) return true;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace

GameInstance::GameInstance(Unchecked, Graph graph, std::vector<CostSharingScheme> schemes,
                           std::vector<Terminals> agents, std::optional<Recipe> recipe)
    : graph_(std::move(graph)), schemes_(std::move(schemes)), agents_(std::move(agents)), recipe_(std::move(recipe)) {}

GameInstance::GameInstance(Graph graph, std::vector<CostSharingScheme> schemes, std::vector<Terminals> agents,
                           std::optional<Recipe> recipe)
    : GameInstance(Unchecked{}, std::move(graph), std::move(schemes), std::move(agents), std::move(recipe)) {
  if (schemes_.size() != static_cast<std::size_t>(graph_.num_edges())) {
    throw std::invalid_argument("one cost-sharing scheme per edge required");
  }
  for (std::size_t e = 0; e < schemes_.size(); ++e) {
    if (auto v = validate_scheme(schemes_[e]); !v.empty()) {
      throw SchemeViolationError("edge " + std::to_string(e) + ": " + v.front().message);
    }
  }
  for (const Terminals& t : agents_) {
    if (t.source < 0 || t.source >= graph_.num_nodes() || t.sink < 0 || t.sink >= graph_.num_nodes()) {
      throw std::invalid_argument("agent terminal out of range");
    }
    if (t.source == t.sink) throw std::invalid_argument("agent source equals sink");
  }
  if (is_symmetric()) {
    const auto caps = capacities();
    const Flow f = max_flow(graph_, caps, graph_.source(), graph_.sink());
    if (f.value < num_agents()) {
      throw InfeasibleGame("max flow " + std::to_string(f.value) + " < " + std::to_string(num_agents()) +
                           " agents");
    }
  } else if (!has_feasible_profile(graph_, schemes_, agents_)) {
    throw InfeasibleGame("no feasible strategy profile exists");
  }
}

GameInstance GameInstance::symmetric(Graph graph, std::vector<CostSharingScheme> schemes, int agents,
                                     std::optional<Recipe> recipe) {
  if (agents < 0) throw ParameterViolation("negative agent count");
  std::vector<Terminals> t(static_cast<std::size_t>(agents), Terminals{graph.source(), graph.sink()});
  return GameInstance(std::move(graph), std::move(schemes), std::move(t), std::move(recipe));
}

bool GameInstance::is_symmetric() const noexcept {
  return std::all_of(agents_.begin(), agents_.end(), [&](const Terminals& t) {
    return t.source == graph_.source() && t.sink == graph_.sink();
  });
}

std::vector<long> GameInstance::capacities() const {
  std::vector<long> caps;
  caps.reserve(schemes_.size());
  for (const auto& s : schemes_) caps.push_back(s.capacity());
  return caps;
}

GameInstance GameInstance::scaled(const Rational& factor) const {
  std::vector<CostSharingScheme> s;
  s.reserve(schemes_.size());
  for (const auto& scheme : schemes_) s.push_back(scheme.scaled(factor));
  // scaling preserves every validated property and the feasible set
  return GameInstance(Unchecked{}, graph_, std::move(s), agents_, recipe_);
}

// ---------------------------------------------------------------------------

StrategyProfile::StrategyProfile(const Graph& graph, std::vector<Path> paths)
    : paths_(std::move(paths)), loads_(static_cast<std::size_t>(graph.num_edges()), 0) {
  for (std::size_t j = 0; j < paths_.size(); ++j) {
    const Path& p = paths_[j];
    if (p.empty()) throw std::invalid_argument("agent " + std::to_string(j) + " has an empty path");
    const NodeId from = p.front() >= 0 && p.front() < graph.num_edges() ? graph.edge(p.front()).tail : -1;
    const NodeId to = p.back() >= 0 && p.back() < graph.num_edges() ? graph.edge(p.back()).head : -1;
    if (from < 0 || to < 0 || !graph.is_simple_path(p, from, to)) {
      throw std::invalid_argument("agent " + std::to_string(j) + " path is not a simple directed path");
    }
    for (EdgeId e : p) ++loads_[static_cast<std::size_t>(e)];
  }
}

bool StrategyProfile::uses(int agent, EdgeId e) const {
  const Path& p = path(agent);
  return std::find(p.begin(), p.end(), e) != p.end();
}

StrategyProfile StrategyProfile::with_path(const Graph& graph, int agent, Path path) const {
  auto paths = paths_;
  paths.at(static_cast<std::size_t>(agent)) = std::move(path);
  return StrategyProfile(graph, std::move(paths));
}

StrategyProfile StrategyProfile::without(const Graph& graph, int agent) const {
  auto paths = paths_;
  paths.erase(paths.begin() + agent);
  return StrategyProfile(graph, std::move(paths));
}

StrategyProfile StrategyProfile::with_extra(const Graph& graph, Path path) const {
  auto paths = paths_;
  paths.push_back(std::move(path));
  return StrategyProfile(graph, std::move(paths));
}

void check_profile(const GameInstance& instance, const StrategyProfile& profile) {
  if (profile.num_agents() != instance.num_agents()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.num_agents()) + " paths for " +
                                std::to_string(instance.num_agents()) + " agents");
  }
  for (int j = 0; j < profile.num_agents(); ++j) {
    const Terminals& t = instance.terminals(j);
    if (!instance.graph().is_simple_path(profile.path(j), t.source, t.sink)) {
      throw std::invalid_argument("agent " + std::to_string(j) + " path does not join its terminals");
    }
  }
}

bool is_feasible(const GameInstance& instance, const StrategyProfile& profile) {
  const auto loads = profile.loads();
  for (std::size_t e = 0; e < loads.size(); ++e) {
    if (loads[e] > instance.capacity(static_cast<EdgeId>(e))) return false;
  }
  return true;
}

Rational agent_cost(const GameInstance& instance, const StrategyProfile& profile, int agent) {
  Rational total;
  for (EdgeId e : profile.path(agent)) {
    const int x = profile.load(e);
    if (x > instance.capacity(e)) return Rational::infinity();
    total += instance.scheme(e).share(x);
  }
  return total;
}

Rational sum_cost(const GameInstance& instance, const StrategyProfile& profile) {
  Rational total;
  for (int j = 0; j < profile.num_agents(); ++j) total += agent_cost(instance, profile, j);
  return total;
}

Rational max_cost(const GameInstance& instance, const StrategyProfile& profile) {
  Rational worst;
  for (int j = 0; j < profile.num_agents(); ++j) worst = max(worst, agent_cost(instance, profile, j));
  return worst;
}

Rational potential(const GameInstance& instance, const StrategyProfile& profile) {
  Rational total;
  const auto loads = profile.loads();
  for (std::size_t e = 0; e < loads.size(); ++e) {
    const auto& scheme = instance.scheme(static_cast<EdgeId>(e));
    if (loads[e] > scheme.capacity()) {
      throw InfeasibleProfile("edge " + std::to_string(e) + " carries " + std::to_string(loads[e]) +
                              " agents over capacity " + std::to_string(scheme.capacity()));
    }
    total += scheme.cumulative(loads[e]);
  }
  return total;
}

NashCheck is_nash(const GameInstance& instance, const StrategyProfile& profile) {
  check_profile(instance, profile);
  if (!is_feasible(instance, profile)) throw InfeasibleProfile("Nash check on an infeasible profile");
  for (int j = 0; j < profile.num_agents(); ++j) {
    if (auto dev = best_response(instance, profile, j)) return {false, std::move(dev)};
  }
  return {true, std::nullopt};
}

}  // namespace csglab
