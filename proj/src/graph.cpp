#include "s2gn/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace s2gn {

namespace {

void check_node(const Graph& g, NodeId v, const char* what) {
  if (v < 0 || v >= g.node_count()) {
    throw std::invalid_argument(std::string(what) + ": node " + std::to_string(v) +
                                " out of range [0, " + std::to_string(g.node_count()) + ")");
  }
}

}  // namespace

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(*this, v, "neighbors");
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(NodeId v) const {
  check_node(*this, v, "degree");
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || a >= node_count_ || b < 0 || b >= node_count_ || a == b) return false;
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

void Graph::set_node_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != node_count_) {
    throw std::invalid_argument("node label count " + std::to_string(labels.size()) +
                                " does not match node count " + std::to_string(node_count_));
  }
  node_labels_ = std::move(labels);
}

Graph build_graph(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edge_list) {
  if (node_count < 0) throw std::invalid_argument("node_count must be non-negative");
  Graph g;
  g.node_count_ = node_count;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count) {
      throw std::invalid_argument("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") has an endpoint outside [0, " + std::to_string(node_count) + ")");
    }
    if (a == b) continue;
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adj_.assign(static_cast<std::size_t>(node_count), {});
  for (const EdgeKey& e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

ComponentLabels connected_components(const Graph& g) {
  ComponentLabels out;
  out.label.assign(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<NodeId> queue;
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (out.label[static_cast<std::size_t>(start)] != -1) continue;
    const int id = out.count++;
    out.label[static_cast<std::size_t>(start)] = id;
    queue.push(start);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop();
      for (NodeId w : g.neighbors(v)) {
        if (out.label[static_cast<std::size_t>(w)] == -1) {
          out.label[static_cast<std::size_t>(w)] = id;
          queue.push(w);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  return connected_components(g).count == 1;
}

Graph largest_connected_component(const Graph& g) {
  if (g.node_count() == 0) return g;
  const ComponentLabels comps = connected_components(g);
  std::vector<int> size(static_cast<std::size_t>(comps.count), 0);
  for (int lbl : comps.label) ++size[static_cast<std::size_t>(lbl)];
  // Component ids are assigned in order of their smallest node, so the
  // first strict maximum realizes the smallest-id tie-break.
  int best = 0;
  for (int c = 1; c < comps.count; ++c) {
    if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]) best = c;
  }
  std::vector<NodeId> to_new(static_cast<std::size_t>(g.node_count()), -1);
  int next = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comps.label[static_cast<std::size_t>(v)] == best) to_new[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const EdgeKey& e : g.edges()) {
    if (comps.label[static_cast<std::size_t>(e.u)] == best) {
      edges.emplace_back(to_new[static_cast<std::size_t>(e.u)], to_new[static_cast<std::size_t>(e.v)]);
    }
  }
  return build_graph(next, edges);
}

Graph relabel(const Graph& g, const std::vector<NodeId>& mapping) {
  const auto n = static_cast<std::size_t>(g.node_count());
  if (mapping.size() != n) {
    throw std::invalid_argument("relabel: mapping size " + std::to_string(mapping.size()) +
                                " does not match node count " + std::to_string(g.node_count()));
  }
  std::vector<bool> hit(n, false);
  for (NodeId m : mapping) {
    if (m < 0 || m >= g.node_count() || hit[static_cast<std::size_t>(m)]) {
      throw std::invalid_argument("relabel: mapping is not a bijection onto 0.." +
                                  std::to_string(g.node_count() - 1));
    }
    hit[static_cast<std::size_t>(m)] = true;
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edges().size());
  for (const EdgeKey& e : g.edges()) {
    edges.emplace_back(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)]);
  }
  return build_graph(g.node_count(), edges);
}

}  // namespace s2gn
