#include "csglab/instances.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "csglab/errors.hpp"

namespace csglab {

namespace {

// Portable draws: libstdc++ and libc++ distributions differ, raw engine output does not.
int uniform(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Rational random_cost(std::mt19937_64& rng, int lo, int hi, int max_den) {
  const int den = uniform(rng, 1, std::max(1, max_den));
  return Rational(uniform(rng, lo * den, hi * den), den);
}

CostSharingScheme random_scheme(std::mt19937_64& rng, SchemeFamily family, const Rational& cost, int capacity) {
  if (family == SchemeFamily::Mixed) family = static_cast<SchemeFamily>(uniform(rng, 0, 2));
  switch (family) {
    case SchemeFamily::Threshold:
      if (capacity >= 1) return make_threshold_scheme(cost, capacity, uniform(rng, 1, capacity));
      return make_ordinary_scheme(cost, capacity);
    case SchemeFamily::RandomValid: {
      std::vector<Rational> table;
      for (int x = 1; x <= capacity; ++x) {
        if (x == 1) {
          table.push_back(cost);
          continue;
        }
        // project a random draw onto [p/x, f(x-1)]
        const Rational lo = cost / Rational(x);
        const Rational& hi = table.back();
        table.push_back(lo + (hi - lo) * Rational(uniform(rng, 0, 4), 4));
      }
      CostSharingScheme scheme(cost, capacity, std::move(table));
      if (!validate_scheme(scheme).empty()) throw GenerationFailed("projected share table failed validation");
      return scheme;
    }
    case SchemeFamily::Ordinary:
    case SchemeFamily::Mixed:
      break;
  }
  return make_ordinary_scheme(cost, capacity);
}

SpExpression random_expression(std::mt19937_64& rng, int edges, int depth_left) {
  if (edges <= 1 || depth_left == 0) return SpExpression::edge();
  // keep both halves buildable within the remaining depth
  const int room = depth_left - 1 >= 30 ? edges : std::min(edges - 1, 1 << (depth_left - 1));
  const int lo = std::max(1, edges - room);
  const int left = uniform(rng, lo, std::min(edges - 1, room));
  auto a = random_expression(rng, left, depth_left - 1);
  auto b = random_expression(rng, edges - left, depth_left - 1);
  return uniform(rng, 0, 1) == 0 ? SpExpression::series(std::move(a), std::move(b))
                                 : SpExpression::parallel(std::move(a), std::move(b));
}

Recipe recipe(std::string kind, std::vector<std::pair<std::string, std::string>> params) {
  std::sort(params.begin(), params.end());
  return Recipe{std::move(kind), std::move(params)};
}

void check_random_ranges(int agents, int cost_min, int cost_max, int max_den, int cap_min, int cap_max) {
  if (agents < 0) throw ParameterViolation("agent count must be >= 0");
  if (cost_min < 0 || cost_min > cost_max) throw ParameterViolation("cost range must satisfy 0 <= min <= max");
  if (max_den < 1) throw ParameterViolation("max denominator must be >= 1");
  if (cap_min < 1 || cap_min > cap_max) throw ParameterViolation("capacity range must satisfy 1 <= min <= max");
}

}  // namespace

Fig2Paths fig2_paths() { return {{0, 2, 6}, {0, 3, 5}, {1, 5}, {1, 4, 6}, {0, 3, 4, 6}}; }

GameInstance fig2_dag(const Rational& x, const Rational& y, bool allow_equal) {
  if (x.is_infinite() || y.is_infinite() || x.sign() <= 0 || !(x < y || (allow_equal && x == y))) {
    throw ParameterViolation("fig2 requires 0 < x < y, got x=" + x.str() + " y=" + y.str());
  }
  enum : NodeId { s, a, b, c, t };
  Graph g({"s", "a", "b", "c", "t"},
          {{0, s, a}, {1, s, b}, {2, a, c}, {3, a, b}, {4, b, c}, {5, b, t}, {6, c, t}}, s, t);
  const Rational cost[] = {x, x, x, y, y, x, x};
  std::vector<CostSharingScheme> schemes;
  for (const Rational& p : cost) schemes.push_back(make_ordinary_scheme(p, 1));
  GameInstance instance = GameInstance::symmetric(std::move(g), std::move(schemes), 2,
                                                  recipe("fig2", {{"x", x.str()}, {"y", y.str()}}));

  const auto paths = fig2_paths();
  const StrategyProfile good(instance.graph(), {paths.s_a_c_t, paths.s_b_t});
  const StrategyProfile bad(instance.graph(), {paths.s_a_b_t, paths.s_b_c_t});
  auto expect = [](const Rational& got, const Rational& want, const char* what) {
    if (got != want) {
      throw SelfCheckFailed(std::string(what) + ": got " + got.str() + ", expected " + want.str());
    }
  };
  expect(sum_cost(instance, good), Rational(5) * x, "sum-cost of {sact, sbt}");
  expect(max_cost(instance, good), Rational(3) * x, "max-cost of {sact, sbt}");
  expect(sum_cost(instance, bad), Rational(4) * x + Rational(2) * y, "sum-cost of {sabt, sbct}");
  expect(max_cost(instance, bad), Rational(2) * x + y, "max-cost of {sabt, sbct}");
  if (!is_nash(instance, bad)) throw SelfCheckFailed("{sabt, sbct} is not an equilibrium");
  return instance;
}

GameInstance fig3_parallel(int n, const Rational& eps) {
  if (n < 2) throw ParameterViolation("fig3 requires n >= 2");
  if (eps.is_infinite() || eps.sign() <= 0) throw ParameterViolation("fig3 requires eps > 0");
  std::vector<Edge> edges;
  std::vector<CostSharingScheme> schemes;
  for (int i = 0; i <= n; ++i) edges.push_back({i, 0, 1});
  schemes.push_back(make_ordinary_scheme(Rational(1, n), 1));
  for (int i = 1; i < n; ++i) schemes.push_back(make_ordinary_scheme(Rational(1), 1));
  schemes.push_back(make_threshold_scheme(Rational(1) + eps, n, n));
  return GameInstance::symmetric(Graph({"s", "t"}, std::move(edges), 0, 1), std::move(schemes), n,
                                 recipe("fig3", {{"n", std::to_string(n)}, {"eps", eps.str()}}));
}

GameInstance two_link(int n) {
  if (n < 1) throw ParameterViolation("two-link requires n >= 1");
  std::vector<CostSharingScheme> schemes{make_ordinary_scheme(Rational(1), n), make_ordinary_scheme(Rational(n), n)};
  return GameInstance::symmetric(Graph({"s", "t"}, {{0, 0, 1}, {1, 0, 1}}, 0, 1), std::move(schemes), n,
                                 recipe("two-link", {{"n", std::to_string(n)}}));
}

std::string_view to_string(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::Ordinary:
      return "ordinary";
    case SchemeFamily::Threshold:
      return "threshold";
    case SchemeFamily::RandomValid:
      return "random-valid";
    case SchemeFamily::Mixed:
      return "mixed";
  }
  return "mixed";
}

SchemeFamily parse_scheme_family(std::string_view text) {
  for (auto f : {SchemeFamily::Ordinary, SchemeFamily::Threshold, SchemeFamily::RandomValid, SchemeFamily::Mixed}) {
    if (to_string(f) == text) return f;
  }
  throw ParameterViolation("unknown scheme family \"" + std::string(text) + "\"");
}

GameInstance random_sp(const RandomSpOptions& o) {
  check_random_ranges(o.agents, o.cost_min, o.cost_max, o.max_denominator, o.cap_min, o.cap_max);
  if (o.max_edges < 1 || o.max_depth < 0) throw ParameterViolation("random-sp needs max_edges >= 1, max_depth >= 0");
  std::mt19937_64 rng(o.seed);

  const int reachable = o.max_depth >= 30 ? o.max_edges : std::min(o.max_edges, 1 << o.max_depth);
  Graph g = build_from_sp(random_expression(rng, uniform(rng, 1, reachable), o.max_depth));

  std::vector<Rational> costs;
  std::vector<long> caps;
  for (int e = 0; e < g.num_edges(); ++e) {
    costs.push_back(random_cost(rng, o.cost_min, o.cost_max, o.max_denominator));
    caps.push_back(uniform(rng, o.cap_min, o.cap_max));
  }
  // every edge of a series-parallel graph lies on an s-t path, so random walks always reach t
  const long target = std::max(o.agents, 0);
  for (int guard = 0; max_flow(g, caps, g.source(), g.sink()).value < target; ++guard) {
    if (guard > 10'000) throw GenerationFailed("could not raise capacities to admit all agents");
    for (NodeId v = g.source(); v != g.sink();) {
      const auto out = g.out_edges(v);
      const EdgeId e = out[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(out.size()) - 1))];
      auto& c = caps[static_cast<std::size_t>(e)];
      c = std::min(c + 1, std::max(target, c));
      v = g.edge(e).head;
    }
  }

  std::vector<CostSharingScheme> schemes;
  for (int e = 0; e < g.num_edges(); ++e) {
    schemes.push_back(random_scheme(rng, o.family, costs[static_cast<std::size_t>(e)],
                                    static_cast<int>(caps[static_cast<std::size_t>(e)])));
  }
  return GameInstance::symmetric(std::move(g), std::move(schemes), o.agents,
                                 recipe("random-sp", {{"seed", std::to_string(o.seed)},
                                                      {"n", std::to_string(o.agents)},
                                                      {"max_edges", std::to_string(o.max_edges)},
                                                      {"max_depth", std::to_string(o.max_depth)},
                                                      {"family", std::string(to_string(o.family))}}));
}

GameInstance random_asymmetric(const RandomAsymmetricOptions& o) {
  check_random_ranges(o.agents, o.cost_min, o.cost_max, o.max_denominator, o.cap_min, o.cap_max);
  if (o.nodes < 4) throw ParameterViolation("random-asym needs at least 4 nodes");
  if (o.agents < 1) throw ParameterViolation("random-asym needs at least one agent");
  std::mt19937_64 rng(o.seed);

  std::vector<std::string> labels;
  for (int v = 0; v < o.nodes; ++v) labels.push_back("v" + std::to_string(v));

  for (int attempt = 0; attempt < o.max_attempts; ++attempt) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId u = 0; u < o.nodes; ++u) {
      for (NodeId v = u + 1; v < o.nodes; ++v) pairs.emplace_back(u, v);
    }
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[static_cast<std::size_t>(rng() % i)]);
    const int m = uniform(rng, o.nodes, std::min<int>(o.max_edges, static_cast<int>(pairs.size())));
    pairs.resize(static_cast<std::size_t>(m));
    std::sort(pairs.begin(), pairs.end());
    std::vector<Edge> edges;
    for (const auto& [u, v] : pairs) edges.push_back({static_cast<EdgeId>(edges.size()), u, v});
    Graph g(labels, std::move(edges), 0, o.nodes - 1);
    if (classify(g) != GraphClass::Dag) continue;

    std::vector<Terminals> agents;
    for (int j = 0; j < o.agents; ++j) {
      NodeId u = uniform(rng, 0, o.nodes - 2);
      NodeId v = uniform(rng, u + 1, o.nodes - 1);
      agents.push_back({u, v});
    }
    const bool connected = std::all_of(agents.begin(), agents.end(), [&](const Terminals& t) {
      return !enumerate_st_paths(g, t.source, t.sink).empty();
    });
    const bool asymmetric = std::any_of(agents.begin(), agents.end(), [&](const Terminals& t) {
      return t.source != g.source() || t.sink != g.sink();
    });
    if (!connected || !asymmetric) continue;

    std::vector<CostSharingScheme> schemes;
    for (int e = 0; e < g.num_edges(); ++e) {
      const Rational cost = random_cost(rng, o.cost_min, o.cost_max, o.max_denominator);
      schemes.push_back(random_scheme(rng, o.family, cost, uniform(rng, o.cap_min, o.cap_max)));
    }
    try {
      return GameInstance(std::move(g), std::move(schemes), std::move(agents),
                          recipe("random-asym", {{"seed", std::to_string(o.seed)},
                                                 {"n", std::to_string(o.agents)},
                                                 {"nodes", std::to_string(o.nodes)},
                                                 {"max_edges", std::to_string(o.max_edges)},
                                                 {"family", std::string(to_string(o.family))}}));
    } catch (const InfeasibleGame&) {
      continue;
    }
  }
  throw GenerationFailed("no feasible asymmetric DAG instance after " + std::to_string(o.max_attempts) + " attempts");
}

}  // namespace csglab
