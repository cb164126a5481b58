#include "csglab/extension.hpp"

#include <stdexcept>

#include "csglab/errors.hpp"

namespace csglab {

Path feasible_extension(const GameInstance& instance, const StrategyProfile& larger, const StrategyProfile& smaller) {
  const Graph& g = instance.graph();
  const GraphClass cls = classify(g);
  if (cls != GraphClass::ParallelLink && cls != GraphClass::SeriesParallel) {
    throw NotSeriesParallel("feasible extension needs a series-parallel graph, got " + std::string(to_string(cls)));
  }
  if (smaller.num_agents() >= larger.num_agents()) {
    throw std::invalid_argument("smaller profile must have fewer agents than the larger one");
  }
  for (const StrategyProfile* p : {&larger, &smaller}) {
    if (!is_feasible(instance, *p)) throw InfeasibleProfile("extension input profile is infeasible");
    for (const Path& path : p->paths()) {
      if (!g.is_simple_path(path, g.source(), g.sink())) {
        throw std::invalid_argument("extension input path does not join s and t");
      }
    }
  }

  std::vector<long> room(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (larger.load(e) > 0) room[static_cast<std::size_t>(e)] = instance.capacity(e) - smaller.load(e);
  }
  const Flow empty{std::vector<long>(room.size(), 0), 0};
  const auto path = augmenting_path(g, room, empty, g.source(), g.sink());
  if (!path) throw InternalAssertion("no feasible extension inside the larger profile's edges");

  Path out;
  out.reserve(path->size());
  for (const ResidualArc& arc : *path) out.push_back(arc.edge);
  return out;
}

}  // namespace csglab
