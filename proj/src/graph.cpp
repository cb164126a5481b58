#include "csglab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "csglab/errors.hpp"

namespace csglab {

Graph::Graph(std::vector<std::string> node_labels, std::vector<Edge> edges, NodeId source, NodeId sink,
             bool allow_self_loops)
    : labels_(std::move(node_labels)), edges_(std::move(edges)), source_(source), sink_(sink) {
  const int n = num_nodes();
  auto valid = [n](NodeId v) { return v >= 0 && v < n; };
  if (!valid(source_) || !valid(sink_)) throw std::invalid_argument("terminal out of range");
  if (source_ == sink_) throw std::invalid_argument("source and sink coincide");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate node label");
    }
  }
  out_.resize(labels_.size());
  in_.resize(labels_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i)) {
      throw std::invalid_argument("edge ids must be 0..m-1 in order; found " + std::to_string(e.id) +
                                  " at position " + std::to_string(i));
    }
    if (!valid(e.tail) || !valid(e.head)) throw std::invalid_argument("edge endpoint out of range");
    if (e.tail == e.head && !allow_self_loops) {
      throw std::invalid_argument("self-loop on edge " + std::to_string(e.id));
    }
    out_[static_cast<std::size_t>(e.tail)].push_back(e.id);
    in_[static_cast<std::size_t>(e.head)].push_back(e.id);
  }
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return static_cast<NodeId>(v);
  }
  return std::nullopt;
}

bool Graph::is_simple_path(const Path& path, NodeId from, NodeId to) const {
  if (path.empty()) return false;
  std::vector<bool> seen(labels_.size(), false);
  NodeId at = from;
  seen[static_cast<std::size_t>(at)] = true;
  for (EdgeId id : path) {
    if (id < 0 || id >= num_edges()) return false;
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    if (e.tail != at) return false;
    at = e.head;
    if (seen[static_cast<std::size_t>(at)]) return false;
    seen[static_cast<std::size_t>(at)] = true;
  }
  return at == to;
}

// ---------------------------------------------------------------------------

SpExpression::SpExpression(Kind kind, std::shared_ptr<const SpExpression> left,
                           std::shared_ptr<const SpExpression> right)
    : kind_(kind),
      left_(std::move(left)),
      right_(std::move(right)),
      edges_(kind == Kind::Edge ? 1 : left_->edges_ + right_->edges_) {}

SpExpression SpExpression::edge() { return SpExpression(Kind::Edge, nullptr, nullptr); }

SpExpression SpExpression::series(SpExpression first, SpExpression second) {
  return SpExpression(Kind::Series, std::make_shared<const SpExpression>(std::move(first)),
                      std::make_shared<const SpExpression>(std::move(second)));
}

SpExpression SpExpression::parallel(SpExpression first, SpExpression second) {
  return SpExpression(Kind::Parallel, std::make_shared<const SpExpression>(std::move(first)),
                      std::make_shared<const SpExpression>(std::move(second)));
}

namespace {

struct SpBuilder {
  std::vector<std::string> labels{"s", "t"};
  std::vector<Edge> edges;

  void build(const SpExpression& expr, NodeId tail, NodeId head) {
    switch (expr.kind()) {
      case SpExpression::Kind::Edge:
        edges.push_back({static_cast<EdgeId>(edges.size()), tail, head});
        break;
      case SpExpression::Kind::Series: {
        const auto mid = static_cast<NodeId>(labels.size());
        labels.push_back("v" + std::to_string(mid));
        build(expr.left(), tail, mid);
        build(expr.right(), mid, head);
        break;
      }
      case SpExpression::Kind::Parallel:
        build(expr.left(), tail, head);
        build(expr.right(), tail, head);
        break;
    }
  }
};

}  // namespace

Graph build_from_sp(const SpExpression& expr) {
  SpBuilder b;
  b.build(expr, 0, 1);
  return Graph(std::move(b.labels), std::move(b.edges), 0, 1);
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::ParallelLink:
      return "ParallelLink";
    case GraphClass::SeriesParallel:
      return "SeriesParallel";
    case GraphClass::Dag:
      return "Dag";
    case GraphClass::General:
      return "General";
  }
  return "General";
}

bool is_acyclic(const Graph& graph) {
  std::vector<int> indeg(static_cast<std::size_t>(graph.num_nodes()), 0);
  for (const Edge& e : graph.edges()) ++indeg[static_cast<std::size_t>(e.head)];
  std::vector<NodeId> ready;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const NodeId v = ready.back();
    ready.pop_back();
    ++visited;
    for (EdgeId id : graph.out_edges(v)) {
      const NodeId h = graph.edge(id).head;
      if (--indeg[static_cast<std::size_t>(h)] == 0) ready.push_back(h);
    }
  }
  return visited == graph.num_nodes();
}

namespace {

// Series/parallel reduction to a fixpoint on an acyclic multigraph.
bool reduces_to_single_edge(const Graph& graph) {
  const NodeId s = graph.source();
  const NodeId t = graph.sink();
  std::multiset<std::pair<NodeId, NodeId>> arcs;
  for (const Edge& e : graph.edges()) arcs.emplace(e.tail, e.head);
  std::vector<bool> alive(static_cast<std::size_t>(graph.num_nodes()), true);

  bool changed = true;
  while (changed) {
    changed = false;
    // parallel reduction
    for (auto it = arcs.begin(); it != arcs.end();) {
      auto next = std::next(it);
      if (next != arcs.end() && *next == *it) {
        arcs.erase(next);
        changed = true;
      } else {
        it = next;
      }
    }
    // series reduction
    for (NodeId w = 0; w < graph.num_nodes(); ++w) {
      if (w == s || w == t || !alive[static_cast<std::size_t>(w)]) continue;
      std::vector<std::multiset<std::pair<NodeId, NodeId>>::iterator> ins;
      std::vector<std::multiset<std::pair<NodeId, NodeId>>::iterator> outs;
      for (auto it = arcs.begin(); it != arcs.end(); ++it) {
        if (it->second == w) ins.push_back(it);
        if (it->first == w) outs.push_back(it);
      }
      if (ins.size() != 1 || outs.size() != 1) continue;
      const NodeId u = ins.front()->first;
      const NodeId v = outs.front()->second;
      arcs.erase(ins.front());
      arcs.erase(outs.front());
      arcs.emplace(u, v);
      alive[static_cast<std::size_t>(w)] = false;
      changed = true;
    }
  }
  for (NodeId w = 0; w < graph.num_nodes(); ++w) {
    if (w != s && w != t && alive[static_cast<std::size_t>(w)]) return false;
  }
  return arcs.size() == 1 && *arcs.begin() == std::make_pair(s, t);
}

}  // namespace

GraphClass classify(const Graph& graph) {
  if (!is_acyclic(graph)) return GraphClass::General;
  const bool all_direct =
      graph.num_edges() > 0 && graph.num_nodes() == 2 &&
      std::all_of(graph.edges().begin(), graph.edges().end(),
                  [&](const Edge& e) { return e.tail == graph.source() && e.head == graph.sink(); });
  if (all_direct) return GraphClass::ParallelLink;
  if (reduces_to_single_edge(graph)) return GraphClass::SeriesParallel;
  return GraphClass::Dag;
}

std::vector<Path> enumerate_st_paths(const Graph& graph, NodeId from, NodeId to, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("path cap must be at least 1");
  std::vector<Path> out;
  if (from == to) return out;
  std::vector<bool> on_path(static_cast<std::size_t>(graph.num_nodes()), false);
  Path current;

  auto dfs = [&](auto&& self, NodeId v) -> void {
    if (v == to) {
      if (out.size() == cap) throw PathExplosion(cap, cap + 1);
      out.push_back(current);
      return;
    }
    on_path[static_cast<std::size_t>(v)] = true;
    for (EdgeId id : graph.out_edges(v)) {
      const NodeId h = graph.edge(id).head;
      if (on_path[static_cast<std::size_t>(h)]) continue;
      current.push_back(id);
      self(self, h);
      current.pop_back();
    }
    on_path[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, from);
  return out;
}

// ---------------------------------------------------------------------------

long flow_value(const Graph& graph, std::span<const long> edge_flow, NodeId source) {
  long value = 0;
  for (EdgeId id : graph.out_edges(source)) value += edge_flow[static_cast<std::size_t>(id)];
  for (EdgeId id : graph.in_edges(source)) value -= edge_flow[static_cast<std::size_t>(id)];
  return value;
}

void check_flow(const Graph& graph, std::span<const long> capacities, const Flow& flow, NodeId source,
                NodeId sink) {
  const auto m = static_cast<std::size_t>(graph.num_edges());
  if (capacities.size() != m || flow.edge_flow.size() != m) {
    throw InfeasibleFlow("flow/capacity vectors do not match the edge count");
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (flow.edge_flow[e] < 0 || flow.edge_flow[e] > capacities[e]) {
      throw InfeasibleFlow("flow " + std::to_string(flow.edge_flow[e]) + " on edge " + std::to_string(e) +
                           " outside [0, " + std::to_string(capacities[e]) + "]");
    }
  }
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (v == source || v == sink) continue;
    long net = 0;
    for (EdgeId id : graph.out_edges(v)) net += flow.edge_flow[static_cast<std::size_t>(id)];
    for (EdgeId id : graph.in_edges(v)) net -= flow.edge_flow[static_cast<std::size_t>(id)];
    if (net != 0) throw InfeasibleFlow("conservation violated at node " + graph.label(v));
  }
  if (flow_value(graph, flow.edge_flow, source) != flow.value) {
    throw InfeasibleFlow("declared flow value does not match the source outflow");
  }
}

std::optional<ResidualPath> augmenting_path(const Graph& graph, std::span<const long> capacities,
                                            const Flow& flow, NodeId source, NodeId sink) {
  check_flow(graph, capacities, flow, source, sink);
  const auto n = static_cast<std::size_t>(graph.num_nodes());
  std::vector<std::optional<ResidualArc>> via(n);
  std::vector<bool> reached(n, false);
  std::deque<NodeId> queue{source};
  reached[static_cast<std::size_t>(source)] = true;

  while (!queue.empty() && !reached[static_cast<std::size_t>(sink)]) {
    const NodeId u = queue.front();
    queue.pop_front();
    auto out = graph.out_edges(u);
    auto in = graph.in_edges(u);
    std::size_t i = 0;
    std::size_t j = 0;
    // merge outgoing (forward) and incoming (backward) arcs by edge id
    while (i < out.size() || j < in.size()) {
      const bool take_out = j == in.size() || (i < out.size() && out[i] <= in[j]);
      const EdgeId id = take_out ? out[i++] : in[j++];
      const auto e = static_cast<std::size_t>(id);
      const NodeId v = take_out ? graph.edge(id).head : graph.edge(id).tail;
      const bool residual = take_out ? flow.edge_flow[e] < capacities[e] : flow.edge_flow[e] > 0;
      if (!residual || reached[static_cast<std::size_t>(v)]) continue;
      reached[static_cast<std::size_t>(v)] = true;
      via[static_cast<std::size_t>(v)] = ResidualArc{id, take_out};
      queue.push_back(v);
    }
  }
  if (!reached[static_cast<std::size_t>(sink)]) return std::nullopt;

  ResidualPath path;
  for (NodeId v = sink; v != source;) {
    const ResidualArc arc = *via[static_cast<std::size_t>(v)];
    path.push_back(arc);
    v = arc.forward ? graph.edge(arc.edge).tail : graph.edge(arc.edge).head;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

void augment(Flow& flow, const ResidualPath& path) {
  for (const ResidualArc& arc : path) {
    flow.edge_flow[static_cast<std::size_t>(arc.edge)] += arc.forward ? 1 : -1;
  }
  ++flow.value;
}

Flow max_flow(const Graph& graph, std::span<const long> capacities, NodeId source, NodeId sink) {
  if (capacities.size() != static_cast<std::size_t>(graph.num_edges())) {
    throw std::invalid_argument("capacity vector does not match the edge count");
  }
  for (long c : capacities) {
    if (c < 0) throw std::invalid_argument("negative capacity");
  }
  Flow flow{std::vector<long>(capacities.size(), 0), 0};
  while (auto path = augmenting_path(graph, capacities, flow, source, sink)) augment(flow, *path);
  return flow;
}

std::vector<Path> decompose_flow(const Graph& graph, const Flow& flow, NodeId source, NodeId sink) {
  std::vector<long> remaining = flow.edge_flow;
  const long units = flow_value(graph, remaining, source);
  std::vector<Path> paths;
  for (long k = 0; k < units; ++k) {
    Path walk;
    std::vector<NodeId> nodes{source};
    while (nodes.back() != sink) {
      const NodeId u = nodes.back();
      std::optional<EdgeId> next;
      for (EdgeId id : graph.out_edges(u)) {
        if (remaining[static_cast<std::size_t>(id)] > 0) {
          next = id;
          break;
        }
      }
      if (!next) throw InfeasibleFlow("flow decomposition got stuck at node " + graph.label(u));
      const NodeId v = graph.edge(*next).head;
      walk.push_back(*next);
      auto seen = std::find(nodes.begin(), nodes.end(), v);
      if (seen == nodes.end()) {
        nodes.push_back(v);
        continue;
      }
      // cancel the cycle closed by this edge
      const auto start = static_cast<std::size_t>(seen - nodes.begin());
      for (std::size_t i = start; i < walk.size(); ++i) --remaining[static_cast<std::size_t>(walk[i])];
      walk.resize(start);
      nodes.resize(start + 1);
    }
    for (EdgeId id : walk) --remaining[static_cast<std::size_t>(id)];
    paths.push_back(std::move(walk));
  }
  return paths;
}

}  // namespace csglab
