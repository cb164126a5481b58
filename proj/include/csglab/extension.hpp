#pragma once

#include "csglab/game.hpp"

namespace csglab {

/// Source-sink path made only of edges used by `larger` that can be added to
/// `smaller` without exceeding any capacity.
///
/// Searched as an augmenting path in the network restricted to E(larger)
/// whose capacities are the room c_e - x_e(smaller) left by the smaller
/// profile. On series-parallel graphs such a path always exists when
/// smaller has fewer agents than larger; InternalAssertion otherwise.
/// Throws NotSeriesParallel and InfeasibleProfile on bad input.
Path feasible_extension(const GameInstance& instance, const StrategyProfile& larger, const StrategyProfile& smaller);

}  // namespace csglab
