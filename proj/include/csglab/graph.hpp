#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csglab {

using NodeId = int;
using EdgeId = int;
/// A directed path as the sequence of edge ids it traverses.
using Path = std::vector<EdgeId>;

inline constexpr std::size_t kDefaultPathCap = 10'000;

struct Edge {
  EdgeId id;
  NodeId tail;
  NodeId head;
};

/// Immutable directed multigraph with designated terminals s and t.
///
/// Nodes are 0..num_nodes()-1 and carry a unique text label. Edge ids are
/// dense: edges()[i].id == i. Parallel edges are allowed; self-loops are
/// rejected unless explicitly enabled. Adjacency lists are sorted by edge id
/// so every traversal is deterministic with lowest-edge-id first.
class Graph {
 public:
  Graph(std::vector<std::string> node_labels, std::vector<Edge> edges, NodeId source, NodeId sink,
        bool allow_self_loops = false);

  int num_nodes() const noexcept { return static_cast<int>(labels_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(static_cast<std::size_t>(v)); }
  std::span<const EdgeId> in_edges(NodeId v) const { return in_.at(static_cast<std::size_t>(v)); }

  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }

  const std::string& label(NodeId v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find_node(std::string_view label) const;

  /// True iff `path` is a nonempty simple directed path from `from` to `to`.
  bool is_simple_path(const Path& path, NodeId from, NodeId to) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  NodeId source_;
  NodeId sink_;
};

/// Series-parallel composition tree whose leaves are single edges.
class SpExpression {
 public:
  enum class Kind { Edge, Series, Parallel };

  static SpExpression edge();
  static SpExpression series(SpExpression first, SpExpression second);
  static SpExpression parallel(SpExpression first, SpExpression second);

  Kind kind() const noexcept { return kind_; }
  const SpExpression& left() const { return *left_; }
  const SpExpression& right() const { return *right_; }
  int edge_count() const noexcept { return edges_; }

 private:
  SpExpression(Kind kind, std::shared_ptr<const SpExpression> left, std::shared_ptr<const SpExpression> right);

  Kind kind_;
  std::shared_ptr<const SpExpression> left_;
  std::shared_ptr<const SpExpression> right_;
  int edges_;
};

/// Materializes the composition. s is node 0, t is node 1, inner nodes are
/// numbered in pre-order as series compositions create them, and edge ids
/// follow the left-to-right order of the leaves.
Graph build_from_sp(const SpExpression& expr);

enum class GraphClass { ParallelLink, SeriesParallel, Dag, General };

std::string_view to_string(GraphClass c);

bool is_acyclic(const Graph& graph);

/// Most restrictive class among parallel-link ⊂ series-parallel ⊂ DAG ⊂ general,
/// taken with respect to the graph's designated terminals.
GraphClass classify(const Graph& graph);

/// All simple directed paths from `from` to `to` in lexicographic order of
/// their edge-id sequences. Throws PathExplosion when more than `cap` exist.
std::vector<Path> enumerate_st_paths(const Graph& graph, NodeId from, NodeId to,
                                     std::size_t cap = kDefaultPathCap);

// ---------------------------------------------------------------------------
// Flow machinery
// ---------------------------------------------------------------------------

/// Integral edge flow; `value` is the net outflow of the source it was built for.
struct Flow {
  std::vector<long> edge_flow;
  long value = 0;
};

/// One arc of a residual path: a forward arc pushes flow along `edge`,
/// a backward arc cancels flow on it.
struct ResidualArc {
  EdgeId edge;
  bool forward;

  friend bool operator==(const ResidualArc&, const ResidualArc&) = default;
};
using ResidualPath = std::vector<ResidualArc>;

/// Net outflow of `source` minus inflow.
long flow_value(const Graph& graph, std::span<const long> edge_flow, NodeId source);

/// Throws InfeasibleFlow on capacity or conservation violations.
void check_flow(const Graph& graph, std::span<const long> capacities, const Flow& flow, NodeId source,
                NodeId sink);

/// Shortest augmenting path by breadth-first search over the residual network,
/// scanning arcs in edge-id order. Absent iff `flow` is maximum.
std::optional<ResidualPath> augmenting_path(const Graph& graph, std::span<const long> capacities,
                                            const Flow& flow, NodeId source, NodeId sink);

/// Pushes one unit of flow along `path`.
void augment(Flow& flow, const ResidualPath& path);

/// Integral maximum flow by repeated unit augmentation (Edmonds-Karp order).
Flow max_flow(const Graph& graph, std::span<const long> capacities, NodeId source, NodeId sink);

/// Splits an integral flow into `flow.value` unit source-sink paths. Flow on
/// cycles is discarded. Paths are extracted lowest-edge-id first.
std::vector<Path> decompose_flow(const Graph& graph, const Flow& flow, NodeId source, NodeId sink);

}  // namespace csglab
