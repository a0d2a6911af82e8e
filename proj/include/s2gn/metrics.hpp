#pragma once

#include <map>
#include <vector>

#include "s2gn/graph.hpp"

namespace s2gn {

/// Per-node real-valued scores, indexed by NodeId.
using NodeScores = std::vector<double>;

/// Result of a power-iteration based computation. `converged` is false
/// when the iteration hit max_iter without meeting the tolerance (the
/// last iterate is still returned; degenerate small graphs are common in
/// SGN pipelines and must not abort a run).
struct EigenResult {
  NodeScores values;
  double eigenvalue = 0.0;
  bool converged = false;
};

inline constexpr double kEigenTol = 1e-9;
inline constexpr int kEigenMaxIter = 1000;

/// Core number per node via minimum-degree peeling: core(v) is the largest
/// k such that v belongs to the k-core.
std::vector<int> k_shell(const Graph& g);

/// Exact shortest-path betweenness (Brandes), normalized by
/// 2/((n-1)(n-2)) for n > 2, all zeros otherwise.
NodeScores betweenness_nodes(const Graph& g);

/// Brandes edge variant; unnormalized raw path counts (callers only use
/// the argmax).
std::map<EdgeKey, double> edge_betweenness(const Graph& g);

/// Closeness per node: (c-1)/sum of distances within its component,
/// scaled by (c-1)/(n-1) so disconnected graphs stay comparable.
/// Isolated nodes score 0.
NodeScores closeness(const Graph& g);

/// Power iteration on the adjacency matrix from the uniform vector,
/// L2-normalized each step; stops when successive iterates differ by
/// less than tol in L1 norm. When the raw iteration oscillates (bipartite
/// graphs), it is rerun on A + I, which has the same eigenvectors.
EigenResult eigenvector_centrality(const Graph& g, double tol = kEigenTol,
                                   int max_iter = kEigenMaxIter);

/// Largest adjacency eigenvalue as the Rayleigh quotient of the converged
/// power-iteration vector. Edgeless graphs give 0.
EigenResult largest_adjacency_eigenvalue(const Graph& g, double tol = kEigenTol,
                                         int max_iter = kEigenMaxIter);

/// Local clustering coefficient per node: triangles / C(deg, 2);
/// nodes with degree < 2 score 0.
NodeScores clustering_coefficients(const Graph& g);

/// Fraction of degree-1 nodes; 0 for the empty graph.
double leaf_fraction(const Graph& g);

}  // namespace s2gn
