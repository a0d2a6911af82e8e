#include "s2gn/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "s2gn/metrics.hpp"

namespace s2gn {

SamplingStrategy SamplingStrategy::biased_walk(double p, double q) {
  if (p <= 0.0 || q <= 0.0) throw std::invalid_argument("biased walk requires p > 0 and q > 0");
  return {StrategyKind::biased_walk, p, q};
}

std::string SamplingStrategy::tag() const {
  switch (kind) {
    case StrategyKind::random_walk: return "rw";
    case StrategyKind::biased_walk: return "bw";
    case StrategyKind::link_selection: return "ls";
    case StrategyKind::spanning_tree: return "st";
  }
  return "?";
}

SamplingStrategy parse_strategy(const std::string& tag, double p, double q) {
  if (tag == "rw") return SamplingStrategy::random_walk();
  if (tag == "bw") return SamplingStrategy::biased_walk(p, q);
  if (tag == "ls") return SamplingStrategy::link_selection();
  if (tag == "st") return SamplingStrategy::spanning_tree();
  throw std::invalid_argument("unknown sampling strategy '" + tag + "' (expected rw, bw, ls, st)");
}

namespace {

void check_source(const Graph& g, NodeId source) {
  if (source < 0 || source >= g.node_count()) {
    throw std::invalid_argument("walk source " + std::to_string(source) + " out of range");
  }
}

// Number of edges reachable from `source`, i.e. edges of its component.
int reachable_edges(const Graph& g, NodeId source) {
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  seen[static_cast<std::size_t>(source)] = true;
  std::queue<NodeId> queue;
  queue.push(source);
  long long deg_sum = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop();
    deg_sum += g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push(w);
      }
    }
  }
  return static_cast<int>(deg_sum / 2);
}

// Relabels the collected nodes/edges to a contiguous graph, mapping new
// ids to original ids in ascending original order.
SampledSubstructure finish_substructure(const std::set<NodeId>& nodes,
                                        const std::set<EdgeKey>& edges, bool truncated) {
  SampledSubstructure out;
  out.node_map.assign(nodes.begin(), nodes.end());
  std::vector<NodeId> to_new;
  if (!out.node_map.empty()) {
    to_new.assign(static_cast<std::size_t>(out.node_map.back()) + 1, -1);
    for (std::size_t i = 0; i < out.node_map.size(); ++i) {
      to_new[static_cast<std::size_t>(out.node_map[i])] = static_cast<NodeId>(i);
    }
  }
  std::vector<std::pair<NodeId, NodeId>> relabeled;
  relabeled.reserve(edges.size());
  for (const EdgeKey& e : edges) {
    relabeled.emplace_back(to_new[static_cast<std::size_t>(e.u)], to_new[static_cast<std::size_t>(e.v)]);
  }
  out.graph = build_graph(static_cast<int>(out.node_map.size()), relabeled);
  out.truncated = truncated;
  return out;
}

}  // namespace

NodeId select_source_node(const Graph& g, const SamplingStrategy& strategy, Rng& rng) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot select a source in an empty graph");
  switch (strategy.kind) {
    case StrategyKind::random_walk:
    case StrategyKind::biased_walk: {
      const std::vector<int> cores = k_shell(g);
      NodeId best = 0;
      for (NodeId v = 1; v < g.node_count(); ++v) {
        if (cores[static_cast<std::size_t>(v)] > cores[static_cast<std::size_t>(best)]) best = v;
      }
      return best;
    }
    case StrategyKind::spanning_tree:
      return static_cast<NodeId>(draw_index(rng, static_cast<std::size_t>(g.node_count())));
    case StrategyKind::link_selection:
      return select_source_edge(g).u;
  }
  throw std::logic_error("unreachable strategy kind");
}

EdgeKey select_source_edge(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("cannot select a source edge in an edgeless graph");
  const auto eb = edge_betweenness(g);
  const EdgeKey* best = nullptr;
  double best_score = 0.0;
  for (const auto& [edge, score] : eb) {  // map order is lexicographic, so first max wins ties
    if (best == nullptr || score > best_score) {
      best = &edge;
      best_score = score;
    }
  }
  return *best;
}

SampledSubstructure sample_random_walk(const Graph& g, NodeId source, int budget, int step_cap,
                                       Rng& rng) {
  return sample_biased_walk(g, source, 1.0, 1.0, budget, step_cap, rng);
}

NodeId biased_step(const Graph& g, NodeId previous, NodeId current, double p, double q, Rng& rng) {
  const auto nbrs = g.neighbors(current);
  if (nbrs.empty()) throw std::invalid_argument("biased_step: current node has no neighbors");
  if (previous < 0 || (p == 1.0 && q == 1.0)) {
    return nbrs[draw_index(rng, nbrs.size())];
  }
  std::vector<double> cumulative(nbrs.size());
  double total = 0.0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    const NodeId x = nbrs[i];
    double w;
    if (x == previous) {
      w = 1.0 / p;  // d(prev, x) = 0
    } else if (g.has_edge(previous, x)) {
      w = 1.0;      // d(prev, x) = 1
    } else {
      w = 1.0 / q;  // d(prev, x) = 2 via current
    }
    total += w;
    cumulative[i] = total;
  }
  const double r = std::uniform_real_distribution<double>(0.0, total)(rng);
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
  return nbrs[std::min(static_cast<std::size_t>(it - cumulative.begin()), nbrs.size() - 1)];
}

SampledSubstructure sample_biased_walk(const Graph& g, NodeId source, double p, double q,
                                       int budget, int step_cap, Rng& rng) {
  check_source(g, source);
  if (p <= 0.0 || q <= 0.0) throw std::invalid_argument("biased walk requires p > 0 and q > 0");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");

  std::set<NodeId> nodes{source};
  std::set<EdgeKey> edges;
  if (g.degree(source) == 0) return finish_substructure(nodes, edges, false);

  const int target = std::min(budget, reachable_edges(g, source));
  NodeId current = source;
  NodeId previous = -1;
  int steps = 0;
  while (static_cast<int>(edges.size()) < target && steps < step_cap) {
    const NodeId next = biased_step(g, previous, current, p, q, rng);
    edges.insert(EdgeKey(current, next));
    nodes.insert(next);
    previous = current;
    current = next;
    ++steps;
  }
  const bool truncated = static_cast<int>(edges.size()) < target;
  return finish_substructure(nodes, edges, truncated);
}

SampledSubstructure sample_link_selection(const Graph& g, EdgeKey source_edge, int budget,
                                          int step_cap, Rng& rng) {
  if (!g.has_edge(source_edge.u, source_edge.v)) {
    throw std::invalid_argument("source edge (" + std::to_string(source_edge.u) + ", " +
                                std::to_string(source_edge.v) + ") is not in the graph");
  }
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");

  std::vector<NodeId> pool{source_edge.u, source_edge.v};
  std::set<NodeId> pooled(pool.begin(), pool.end());
  std::set<EdgeKey> edge_pool{source_edge};
  // used[v] = incident edges of v already in the pool; a node is exhausted
  // when used[v] == degree(v).
  std::vector<int> used(static_cast<std::size_t>(g.node_count()), 0);
  used[static_cast<std::size_t>(source_edge.u)] = 1;
  used[static_cast<std::size_t>(source_edge.v)] = 1;
  auto usable = [&](NodeId v) { return g.degree(v) - used[static_cast<std::size_t>(v)]; };
  int usable_nodes = (usable(source_edge.u) > 0 ? 1 : 0) + (usable(source_edge.v) > 0 ? 1 : 0);

  std::vector<NodeId> candidates;
  int draws = 0;
  while (static_cast<int>(edge_pool.size()) < budget && usable_nodes > 0 && draws < step_cap) {
    ++draws;
    const NodeId u = pool[draw_index(rng, pool.size())];
    if (usable(u) == 0) continue;  // rejection; exhaustion is checked via usable_nodes
    candidates.clear();
    for (NodeId w : g.neighbors(u)) {
      if (!edge_pool.contains(EdgeKey(u, w))) candidates.push_back(w);
    }
    const NodeId w = candidates[draw_index(rng, candidates.size())];
    edge_pool.insert(EdgeKey(u, w));
    for (NodeId x : {u, w}) {
      const bool was_usable = pooled.contains(x) && usable(x) > 0;
      ++used[static_cast<std::size_t>(x)];
      if (was_usable && usable(x) == 0) --usable_nodes;
    }
    if (!pooled.contains(w)) {
      pooled.insert(w);
      pool.push_back(w);
      if (usable(w) > 0) ++usable_nodes;
    }
  }
  const bool truncated =
      static_cast<int>(edge_pool.size()) < budget && usable_nodes > 0;  // only the cap stopped us
  return finish_substructure(pooled, edge_pool, truncated);
}

SampledSubstructure sample_spanning_tree(const Graph& g, Rng& rng) {
  if (!is_connected(g)) {
    throw std::invalid_argument("spanning tree sampling requires a connected graph");
  }
  std::vector<EdgeKey> order(g.edges());
  std::shuffle(order.begin(), order.end(), rng);

  // Union-find with path halving; all weights are 1, so shuffled Kruskal
  // realizes a uniform pick among greedy edge orders.
  std::vector<NodeId> parent(static_cast<std::size_t>(g.node_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };

  std::set<NodeId> nodes;
  for (NodeId v = 0; v < g.node_count(); ++v) nodes.insert(v);
  std::set<EdgeKey> tree;
  for (const EdgeKey& e : order) {
    const NodeId ru = find(e.u);
    const NodeId rv = find(e.v);
    if (ru == rv) continue;
    parent[static_cast<std::size_t>(ru)] = rv;
    tree.insert(e);
    if (static_cast<int>(tree.size()) == g.node_count() - 1) break;
  }
  return finish_substructure(nodes, tree, false);
}

SampledSubstructure sample(const Graph& g, const SamplingStrategy& strategy, Rng& rng) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot sample from an empty graph");
  const int budget = g.node_count();
  const int step_cap = 50 * g.node_count();
  switch (strategy.kind) {
    case StrategyKind::random_walk:
      return sample_random_walk(g, select_source_node(g, strategy, rng), budget, step_cap, rng);
    case StrategyKind::biased_walk:
      return sample_biased_walk(g, select_source_node(g, strategy, rng), strategy.p, strategy.q,
                                budget, step_cap, rng);
    case StrategyKind::link_selection:
      return sample_link_selection(g, select_source_edge(g), budget, step_cap, rng);
    case StrategyKind::spanning_tree:
      return sample_spanning_tree(g, rng);
  }
  throw std::logic_error("unreachable strategy kind");
}

}  // namespace s2gn
