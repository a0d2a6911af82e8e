#include "s2gn/sgn.hpp"

#include <algorithm>
#include <stdexcept>

namespace s2gn {

Graph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  // Edge ranks follow the canonical (lexicographic) edge order, keeping
  // downstream sampling on SGN outputs seed-reproducible.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < m; ++i) {
    incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].u)].push_back(i);
    incident[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)].v)].push_back(i);
  }
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& inc : incident) {
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        out.emplace_back(inc[i], inc[j]);
      }
    }
  }
  // Two simple-graph edges share at most one endpoint, so no pair is
  // generated twice.
  return build_graph(m, out);
}

Graph sgn_exact(const Graph& g, int h) {
  if (h != 1 && h != 2) throw std::invalid_argument("SGN order must be 1 or 2");
  Graph out = line_graph(g);
  if (h == 2) out = line_graph(out);
  return out;
}

S2gnResult s2gn(const Graph& g, const SamplingStrategy& strategy, int h, Rng& rng) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot build an S2GN from an empty graph");
  if (h != 1 && h != 2) throw std::invalid_argument("S2GN order must be 1 or 2");

  S2gnResult result;
  result.order = h;
  result.strategy = strategy;
  Graph current = g;
  for (int stage = 0; stage < h; ++stage) {
    if (!is_connected(current)) current = largest_connected_component(current);
    if (current.node_count() < 2 || current.edge_count() < 1) break;
    SampledSubstructure sub = sample(current, strategy, rng);
    result.truncated = result.truncated || sub.truncated;
    current = line_graph(sub.graph);
    ++result.achieved_order;
  }
  result.graph = std::move(current);
  return result;
}

}  // namespace s2gn
