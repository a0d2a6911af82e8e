#pragma once

#include "s2gn/graph.hpp"
#include "s2gn/rng.hpp"
#include "s2gn/sampling.hpp"

namespace s2gn {

/// Line graph of g: one node per edge (ids follow the lexicographic rank
/// of the canonical edge set), nodes adjacent iff the corresponding edges
/// share an endpoint. Edgeless input maps to the empty graph.
Graph line_graph(const Graph& g);

/// Unsampled h-fold line graph, h in {1, 2}.
Graph sgn_exact(const Graph& g, int h);

struct S2gnResult {
  Graph graph;
  int order = 0;           // requested h
  int achieved_order = 0;  // stages actually completed
  SamplingStrategy strategy;
  bool truncated = false;  // any stage's sampling hit its step cap
};

/// Iterated sample-then-map construction: per stage, reduce to the largest
/// component when disconnected, sample a substructure with budget = |V|,
/// and take its line graph. Stops early (reporting achieved_order) when an
/// intermediate drops below 2 nodes or 1 edge. h must be 1 or 2; the input
/// must be non-empty.
S2gnResult s2gn(const Graph& g, const SamplingStrategy& strategy, int h, Rng& rng);

}  // namespace s2gn
