#pragma once

#include <cstdint>
#include <string_view>

#include "csglab/game.hpp"

namespace csglab {

// ---------------------------------------------------------------------------
// Constructed instances
// ---------------------------------------------------------------------------

/// The five source-sink paths of the two-agent DAG instance.
struct Fig2Paths {
  Path s_a_c_t;
  Path s_a_b_t;
  Path s_b_t;
  Path s_b_c_t;
  Path s_a_b_c_t;
};

/// Edge ids: 0 s->a, 1 s->b, 2 a->c, 3 a->b, 4 b->c, 5 b->t, 6 c->t.
Fig2Paths fig2_paths();

/// Two-agent DAG with unbounded price of anarchy: s->a, s->b, a->c, b->t,
/// c->t cost x; a->b, b->c cost y; all capacity 1, ordinary sharing.
///
/// Requires 0 < x < y (ParameterViolation); `allow_equal` also admits x == y,
/// where the instance is still well defined. The constructor re-derives the
/// four closed-form values: {sact, sbt} has sum 5x and max 3x, and {sabt,
/// sbct} is an equilibrium with sum 4x+2y and max 2x+y. Any mismatch throws
/// SelfCheckFailed.
GameInstance fig2_dag(const Rational& x, const Rational& y, bool allow_equal = false);

/// n agents on n+1 parallel links e_0..e_n (edge id i is e_i): e_0 costs 1/n,
/// e_1..e_{n-1} cost 1, all with capacity 1; e_n costs 1+eps with capacity n
/// and charges the full cost unless all n agents share it.
/// Requires n >= 2 and eps > 0.
GameInstance fig3_parallel(int n, const Rational& eps);

/// n agents, two parallel links of cost 1 (edge 0) and n (edge 1), both with
/// capacity n and ordinary sharing.
GameInstance two_link(int n);

// ---------------------------------------------------------------------------
// Seeded random families
// ---------------------------------------------------------------------------

enum class SchemeFamily { Ordinary, Threshold, RandomValid, Mixed };

std::string_view to_string(SchemeFamily f);
SchemeFamily parse_scheme_family(std::string_view text);

struct RandomSpOptions {
  std::uint64_t seed = 42;
  int agents = 2;
  int max_edges = 8;
  int max_depth = 4;
  /// Costs are k/d with d in 1..max_denominator and k/d in [cost_min, cost_max].
  int cost_min = 1;
  int cost_max = 6;
  int max_denominator = 4;
  /// Initial capacities, raised along random paths until n units can flow.
  int cap_min = 1;
  int cap_max = 2;
  SchemeFamily family = SchemeFamily::Mixed;
};

/// Symmetric game on a random series-parallel graph.
GameInstance random_sp(const RandomSpOptions& options);

struct RandomAsymmetricOptions {
  std::uint64_t seed = 42;
  int agents = 2;
  int nodes = 5;
  int max_edges = 10;
  int cost_min = 1;
  int cost_max = 6;
  int max_denominator = 4;
  int cap_min = 1;
  int cap_max = 2;
  SchemeFamily family = SchemeFamily::Mixed;
  int max_attempts = 1000;
};

/// Asymmetric game on a random DAG (never series-parallel) with per-agent
/// terminals. Retries with derived seeds until the game is feasible;
/// GenerationFailed after max_attempts.
GameInstance random_asymmetric(const RandomAsymmetricOptions& options);

}  // namespace csglab
