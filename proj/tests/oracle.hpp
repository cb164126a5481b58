#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw mpq_class arithmetic and edge subsets, sharing no code with the library
// beyond the instance data itself.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "csglab/game.hpp"

namespace oracle {

using csglab::EdgeId;
using csglab::GameInstance;
using csglab::Graph;
using csglab::NodeId;
using csglab::Path;

// Every edge subset that forms a simple from->to path, returned as the path in walk order.
inline std::set<Path> st_paths(const Graph& g, NodeId from, NodeId to) {
  std::set<Path> out;
  const int m = g.num_edges();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::map<NodeId, EdgeId> next;
    std::map<NodeId, int> indeg;
    bool ok = true;
    int size = 0;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1u)) continue;
      ++size;
      const auto& edge = g.edge(e);
      ok = next.emplace(edge.tail, e).second && ++indeg[edge.head] == 1;
    }
    if (!ok || indeg.count(from)) continue;
    Path walk;
    std::set<NodeId> seen{from};
    NodeId at = from;
    while (at != to && next.count(at)) {
      const EdgeId e = next[at];
      walk.push_back(e);
      at = g.edge(e).head;
      if (!seen.insert(at).second) break;
    }
    if (at == to && static_cast<int>(walk.size()) == size) out.insert(walk);
  }
  return out;
}

// Max flow through the min-cut characterization: smallest capacity crossing
// any node set containing `from` but not `to`.
inline long min_cut(const Graph& g, const std::vector<long>& cap, NodeId from, NodeId to) {
  const int n = g.num_nodes();
  long best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> from & 1u) || (mask >> to & 1u)) continue;
    long cut = 0;
    for (const auto& e : g.edges()) {
      if ((mask >> e.tail & 1u) && !(mask >> e.head & 1u)) cut += cap[static_cast<std::size_t>(e.id)];
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

struct Costs {
  bool feasible;
  std::vector<mpq_class> agent;
  mpq_class sum, max, potential;
};

inline mpq_class share(const GameInstance& g, EdgeId e, int load) {
  return g.scheme(e).shares()[static_cast<std::size_t>(load - 1)].value();
}

inline Costs costs(const GameInstance& g, const std::vector<Path>& paths) {
  std::vector<int> load(static_cast<std::size_t>(g.graph().num_edges()));
  for (const auto& p : paths)
    for (EdgeId e : p) ++load[static_cast<std::size_t>(e)];
  Costs c{true, {}, 0, 0, 0};
  for (EdgeId e = 0; e < g.graph().num_edges(); ++e) {
    const int x = load[static_cast<std::size_t>(e)];
    if (x > g.capacity(e)) c.feasible = false;
    for (int k = 1; k <= std::min(x, g.capacity(e)); ++k) c.potential += share(g, e, k);
  }
  if (!c.feasible) return c;
  for (const auto& p : paths) {
    mpq_class cost = 0;
    for (EdgeId e : p) cost += share(g, e, load[static_cast<std::size_t>(e)]);
    c.agent.push_back(cost);
    c.sum += cost;
    if (cost > c.max) c.max = cost;
  }
  return c;
}

inline std::vector<std::set<Path>> strategy_sets(const GameInstance& g) {
  std::vector<std::set<Path>> out;
  for (const auto& t : g.agents()) out.push_back(st_paths(g.graph(), t.source, t.sink));
  return out;
}

// Cheapest cost agent j could reach by a unilateral move (including staying).
inline mpq_class best_unilateral(const GameInstance& g, const std::vector<std::set<Path>>& sets,
                                 std::vector<Path> paths, std::size_t j) {
  mpq_class best = costs(g, paths).agent[j];
  for (const Path& alt : sets[j]) {
    paths[j] = alt;
    const Costs c = costs(g, paths);
    if (c.feasible && c.agent[j] < best) best = c.agent[j];
  }
  return best;
}

inline bool is_nash(const GameInstance& g, const std::vector<std::set<Path>>& sets, const std::vector<Path>& paths) {
  const Costs c = costs(g, paths);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    if (best_unilateral(g, sets, paths, j) < c.agent[j]) return false;
  }
  return true;
}

// Every feasible profile by plain cartesian product.
inline std::vector<std::vector<Path>> profiles(const GameInstance& g) {
  const auto sets = strategy_sets(g);
  std::vector<std::vector<Path>> out{{}};
  for (const auto& s : sets) {
    std::vector<std::vector<Path>> grown;
    for (const auto& partial : out) {
      for (const auto& p : s) {
        auto next = partial;
        next.push_back(p);
        grown.push_back(std::move(next));
      }
    }
    out = std::move(grown);
  }
  std::erase_if(out, [&](const auto& p) { return !costs(g, p).feasible; });
  return out;
}

struct Summary {
  mpq_class opt_sc, opt_mc, worst_sc, best_sc, worst_mc, best_mc;
  std::size_t equilibria = 0;
  std::size_t feasible = 0;
};

inline Summary summarize(const GameInstance& g) {
  const auto sets = strategy_sets(g);
  Summary s;
  bool first = true, first_ne = true;
  for (const auto& p : profiles(g)) {
    const Costs c = costs(g, p);
    ++s.feasible;
    if (first || c.sum < s.opt_sc) s.opt_sc = c.sum;
    if (first || c.max < s.opt_mc) s.opt_mc = c.max;
    first = false;
    if (!is_nash(g, sets, p)) continue;
    ++s.equilibria;
    if (first_ne || c.sum > s.worst_sc) s.worst_sc = c.sum;
    if (first_ne || c.sum < s.best_sc) s.best_sc = c.sum;
    if (first_ne || c.max > s.worst_mc) s.worst_mc = c.max;
    if (first_ne || c.max < s.best_mc) s.best_mc = c.max;
    first_ne = false;
  }
  return s;
}

}  // namespace oracle
