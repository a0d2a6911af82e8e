#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s2gn/graph.hpp"
#include "s2gn/sampling.hpp"

namespace s2gn {

using FeatureMatrix = std::vector<std::vector<double>>;

struct FeatureVector {
  std::vector<double> values;
  std::string schema;
};

inline constexpr int kAttributeDim = 10;

/// Column names of the manual attribute vector, in extraction order.
const std::vector<std::string>& attribute_names();

/// Fixed-order structural attribute vector: node count, edge count,
/// average degree, density, average clustering coefficient, leaf-node
/// fraction, largest adjacency eigenvalue, average betweenness, average
/// closeness, average eigenvector centrality. Degenerate graphs produce
/// zeros where a quantity is undefined. Schema "attrs-v1".
FeatureVector manual_attributes(const Graph& g);

struct AveragedAttributes {
  FeatureVector vector;
  /// False when every repetition stopped below the requested order.
  bool reached_order = true;
};

/// Element-wise mean of manual_attributes over `repeats` independent
/// s2gn constructions; repetition i runs on the sub-seed
/// derive_seed(seed, "s2gn-rep", i), so results are order-independent.
AveragedAttributes averaged_attributes(const Graph& g, const SamplingStrategy& strategy, int order,
                                       int repeats, std::uint64_t seed);

/// Concatenates the parts in the given order. Schema "fused-v1". Throws on
/// an empty list.
FeatureVector fuse(const std::vector<FeatureVector>& parts);

/// PCA with per-column z-score standardization. Rows of `components` are
/// orthonormal; eigenvalues are stored for all input dimensions in
/// descending order.
struct PcaModel {
  std::vector<double> mean;                     // per input column
  std::vector<double> scale;                    // per input column (1 where variance is 0)
  std::vector<std::vector<double>> components;  // target_dim x input_dim
  std::vector<double> explained_variance;       // input_dim, descending
};

/// Fits on rows = samples. Requires 2 <= target_dim-compatible shapes:
/// target_dim <= min(rows, cols) and rows >= 2. Standardizes columns,
/// eigendecomposes the covariance with a cyclic Jacobi solver, and keeps
/// the top target_dim eigenvectors (sign fixed so the largest-magnitude
/// entry is positive).
PcaModel pca_fit(const FeatureMatrix& matrix, int target_dim);

FeatureVector pca_transform(const PcaModel& model, const FeatureVector& v);

/// Cyclic Jacobi eigendecomposition of a symmetric matrix; returns
/// (eigenvalues, eigenvectors as rows), unsorted. Exposed for reuse as an
/// independent check against iterative spectral code.
void jacobi_eigen_symmetric(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                            std::vector<std::vector<double>>& eigenvectors);

}  // namespace s2gn
