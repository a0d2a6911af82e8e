#include "s2gn/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "s2gn/metrics.hpp"
#include "s2gn/rng.hpp"
#include "s2gn/sgn.hpp"

namespace s2gn {

const std::vector<std::string>& attribute_names() {
  static const std::vector<std::string> names = {
      "n_nodes",       "n_edges",        "avg_degree",      "density",       "avg_clustering",
      "leaf_fraction", "max_eigenvalue", "avg_betweenness", "avg_closeness", "avg_eigencentrality"};
  return names;
}

namespace {

double mean_of(const NodeScores& scores) {
  if (scores.empty()) return 0.0;
  return std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
}

}  // namespace

FeatureVector manual_attributes(const Graph& g) {
  const double n = static_cast<double>(g.node_count());
  const double m = static_cast<double>(g.edge_count());
  FeatureVector fv;
  fv.schema = "attrs-v1";
  fv.values.reserve(kAttributeDim);
  fv.values.push_back(n);
  fv.values.push_back(m);
  fv.values.push_back(n > 0 ? 2.0 * m / n : 0.0);
  fv.values.push_back(n >= 2 ? 2.0 * m / (n * (n - 1.0)) : 0.0);
  fv.values.push_back(mean_of(clustering_coefficients(g)));
  fv.values.push_back(leaf_fraction(g));
  fv.values.push_back(largest_adjacency_eigenvalue(g).eigenvalue);
  fv.values.push_back(mean_of(betweenness_nodes(g)));
  fv.values.push_back(mean_of(closeness(g)));
  fv.values.push_back(mean_of(eigenvector_centrality(g).values));
  return fv;
}

AveragedAttributes averaged_attributes(const Graph& g, const SamplingStrategy& strategy, int order,
                                       int repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  AveragedAttributes out;
  out.vector.schema = "attrs-v1";
  out.vector.values.assign(kAttributeDim, 0.0);
  bool any_full = false;
  for (int rep = 0; rep < repeats; ++rep) {
    Rng rng = make_rng(derive_seed(seed, "s2gn-rep", static_cast<std::uint64_t>(rep)));
    const S2gnResult result = s2gn(g, strategy, order, rng);
    any_full = any_full || result.achieved_order == order;
    const FeatureVector fv = manual_attributes(result.graph);
    for (int i = 0; i < kAttributeDim; ++i) {
      out.vector.values[static_cast<std::size_t>(i)] += fv.values[static_cast<std::size_t>(i)];
    }
  }
  for (double& x : out.vector.values) x /= static_cast<double>(repeats);
  out.reached_order = any_full;
  return out;
}

FeatureVector fuse(const std::vector<FeatureVector>& parts) {
  if (parts.empty()) throw std::invalid_argument("fuse requires at least one part");
  FeatureVector out;
  out.schema = "fused-v1";
  for (const FeatureVector& part : parts) {
    out.values.insert(out.values.end(), part.values.begin(), part.values.end());
  }
  return out;
}

void jacobi_eigen_symmetric(std::vector<std::vector<double>> a, std::vector<double>& eigenvalues,
                            std::vector<std::vector<double>>& eigenvectors) {
  const std::size_t n = a.size();
  eigenvectors.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) eigenvectors[i][i] = 1.0;

  constexpr int kMaxSweeps = 100;
  constexpr double kOffTol = 1e-14;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < kOffTol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vpk = eigenvectors[p][k], vqk = eigenvectors[q][k];
          eigenvectors[p][k] = c * vpk - s * vqk;
          eigenvectors[q][k] = s * vpk + c * vqk;
        }
      }
    }
  }
  eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i][i];
}

PcaModel pca_fit(const FeatureMatrix& matrix, int target_dim) {
  const std::size_t rows = matrix.size();
  if (rows < 2) throw std::invalid_argument("PCA requires at least 2 rows");
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) throw std::invalid_argument("PCA input rows have inconsistent widths");
  }
  if (target_dim < 1 || static_cast<std::size_t>(target_dim) > std::min(rows, cols)) {
    throw std::invalid_argument("PCA target dimension " + std::to_string(target_dim) +
                                " exceeds min(rows, cols)");
  }

  PcaModel model;
  model.mean.assign(cols, 0.0);
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < cols; ++j) model.mean[j] += row[j];
  }
  for (double& m : model.mean) m /= static_cast<double>(rows);

  model.scale.assign(cols, 0.0);
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double d = row[j] - model.mean[j];
      model.scale[j] += d * d;
    }
  }
  for (double& s : model.scale) {
    s = std::sqrt(s / static_cast<double>(rows));
    if (s == 0.0) s = 1.0;  // constant column: centered values are 0 anyway
  }

  // Covariance of the standardized data.
  std::vector<std::vector<double>> cov(cols, std::vector<double>(cols, 0.0));
  std::vector<double> z(cols);
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < cols; ++j) z[j] = (row[j] - model.mean[j]) / model.scale[j];
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = i; j < cols; ++j) cov[i][j] += z[i] * z[j];
    }
  }
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i; j < cols; ++j) {
      cov[i][j] /= static_cast<double>(rows - 1);
      cov[j][i] = cov[i][j];
    }
  }

  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  jacobi_eigen_symmetric(cov, eigenvalues, eigenvectors);

  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

  model.explained_variance.reserve(cols);
  for (std::size_t k : order) model.explained_variance.push_back(std::max(eigenvalues[k], 0.0));

  model.components.reserve(static_cast<std::size_t>(target_dim));
  for (int r = 0; r < target_dim; ++r) {
    std::vector<double> comp = eigenvectors[order[static_cast<std::size_t>(r)]];
    std::size_t arg = 0;
    for (std::size_t j = 1; j < cols; ++j) {
      if (std::abs(comp[j]) > std::abs(comp[arg])) arg = j;
    }
    if (comp[arg] < 0.0) {
      for (double& x : comp) x = -x;
    }
    model.components.push_back(std::move(comp));
  }
  return model;
}

FeatureVector pca_transform(const PcaModel& model, const FeatureVector& v) {
  const std::size_t cols = model.mean.size();
  if (v.values.size() != cols) {
    throw std::invalid_argument("PCA transform: vector width " + std::to_string(v.values.size()) +
                                " does not match model width " + std::to_string(cols));
  }
  FeatureVector out;
  out.schema = "pca-v1";
  out.values.reserve(model.components.size());
  for (const auto& comp : model.components) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      acc += comp[j] * (v.values[j] - model.mean[j]) / model.scale[j];
    }
    out.values.push_back(acc);
  }
  return out;
}

}  // namespace s2gn
