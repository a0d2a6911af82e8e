#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s2gn/graph.hpp"
#include "s2gn/rng.hpp"

namespace s2gn {

enum class StrategyKind { random_walk, biased_walk, link_selection, spanning_tree };

/// Sampling strategy tag plus parameters (p and q only matter for the
/// biased walk; positive by invariant).
struct SamplingStrategy {
  StrategyKind kind = StrategyKind::random_walk;
  double p = 1.0;
  double q = 1.0;

  static SamplingStrategy random_walk() { return {StrategyKind::random_walk, 1.0, 1.0}; }
  static SamplingStrategy biased_walk(double p, double q);
  static SamplingStrategy link_selection() { return {StrategyKind::link_selection, 1.0, 1.0}; }
  static SamplingStrategy spanning_tree() { return {StrategyKind::spanning_tree, 1.0, 1.0}; }

  /// Short tag used in file names and schema ids: rw, bw, ls, st.
  std::string tag() const;
};

SamplingStrategy parse_strategy(const std::string& tag, double p, double q);

/// A sampled substructure, relabeled to contiguous ids. node_map[new] =
/// original id. `truncated` is set when the step cap cut the run short of
/// both the budget and edge exhaustion.
struct SampledSubstructure {
  Graph graph;
  std::vector<NodeId> node_map;
  bool truncated = false;
};

/// Source node per strategy: walks start at the max-k-shell node (smallest
/// id on ties), the spanning tree picks uniformly at random, and link
/// selection delegates to select_source_edge (the smaller endpoint is
/// returned here). Throws on an empty graph.
NodeId select_source_node(const Graph& g, const SamplingStrategy& strategy, Rng& rng);

/// Edge with the largest betweenness, lexicographic tie-break. Throws on
/// an edgeless graph.
EdgeKey select_source_edge(const Graph& g);

SampledSubstructure sample_random_walk(const Graph& g, NodeId source, int budget, int step_cap,
                                       Rng& rng);

/// Node2Vec-style 2nd-order walk: from current v with previous t, a
/// neighbor x is weighted 1/p when x == t, 1 when x is adjacent to t, and
/// 1/q otherwise. The first step is uniform.
SampledSubstructure sample_biased_walk(const Graph& g, NodeId source, double p, double q,
                                       int budget, int step_cap, Rng& rng);

/// One step of the walk above: the next node from `current` given
/// `previous` (pass -1 for the uniform first step). `current` must have a
/// neighbor. p = q = 1 reduces exactly to the uniform random-walk step.
NodeId biased_step(const Graph& g, NodeId previous, NodeId current, double p, double q, Rng& rng);

/// Grows a node pool from the source edge; each step draws a pool node
/// uniformly (rejecting exhausted ones) and adds one of its unused
/// incident edges uniformly.
SampledSubstructure sample_link_selection(const Graph& g, EdgeKey source_edge, int budget,
                                          int step_cap, Rng& rng);

/// Unit-weight Kruskal over a uniformly shuffled edge order. Requires a
/// connected input; output has exactly node_count-1 edges.
SampledSubstructure sample_spanning_tree(const Graph& g, Rng& rng);

/// Strategy dispatch with the standard stop rule: budget = |V| and
/// step_cap = 50|V|; the source is chosen per strategy.
SampledSubstructure sample(const Graph& g, const SamplingStrategy& strategy, Rng& rng);

}  // namespace s2gn
