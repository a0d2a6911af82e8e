#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace s2gn {

using NodeId = int;

/// Order-normalized undirected edge: u <= v always holds.
struct EdgeKey {
  NodeId u;
  NodeId v;

  EdgeKey(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Simple undirected graph with contiguous node ids 0..node_count-1.
/// No self-loops, no duplicate edges. Immutable after construction;
/// safe to share across threads.
class Graph {
 public:
  Graph() = default;

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge set, sorted lexicographically.
  const std::vector<EdgeKey>& edges() const { return edges_; }

  /// Neighbors of v, sorted ascending. Throws if v is out of range.
  std::span<const NodeId> neighbors(NodeId v) const;

  /// Degree of v. Throws if v is out of range.
  int degree(NodeId v) const;

  bool has_edge(NodeId a, NodeId b) const;

  const std::optional<std::vector<int>>& node_labels() const { return node_labels_; }
  void set_node_labels(std::vector<int> labels);

 private:
  friend Graph build_graph(int, const std::vector<std::pair<NodeId, NodeId>>&);

  int node_count_ = 0;
  std::vector<EdgeKey> edges_;               // sorted, unique
  std::vector<std::vector<NodeId>> adj_;     // sorted neighbor lists
  std::optional<std::vector<int>> node_labels_;
};

/// Builds a graph from an edge list. Self-loops and duplicate edges
/// (either direction) are dropped. Throws std::invalid_argument when an
/// endpoint is out of range, naming the offending edge.
Graph build_graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edge_list);

/// True iff one BFS reaches every node. The empty graph is connected
/// by convention.
bool is_connected(const Graph& g);

/// Component id per node plus the number of components.
struct ComponentLabels {
  std::vector<int> label;
  int count = 0;
};
ComponentLabels connected_components(const Graph& g);

/// Induced subgraph on the largest component, relabeled to contiguous ids
/// (order-preserving). Ties go to the component containing the smallest
/// original node id. Empty graph maps to the empty graph.
Graph largest_connected_component(const Graph& g);

/// Structure-preserving id rewrite. `mapping[old] = new` must be a
/// bijection onto 0..node_count-1; throws otherwise.
Graph relabel(const Graph& g, const std::vector<NodeId>& mapping);

}  // namespace s2gn
