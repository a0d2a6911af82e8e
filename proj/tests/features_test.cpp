#include "s2gn/features.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "s2gn/sgn.hpp"
#include "test_util.hpp"

namespace s2gn {
namespace {

using testing::complete_graph;
using testing::random_connected_graph;
using testing::random_graph;

TEST(ManualAttributes, CompleteGraphK4) {
  const FeatureVector fv = manual_attributes(complete_graph(4));
  ASSERT_EQ(fv.values.size(), static_cast<std::size_t>(kAttributeDim));
  EXPECT_DOUBLE_EQ(fv.values[0], 4.0);   // nodes
  EXPECT_DOUBLE_EQ(fv.values[1], 6.0);   // edges
  EXPECT_DOUBLE_EQ(fv.values[2], 3.0);   // average degree
  EXPECT_DOUBLE_EQ(fv.values[3], 1.0);   // density
  EXPECT_DOUBLE_EQ(fv.values[4], 1.0);   // clustering
  EXPECT_DOUBLE_EQ(fv.values[5], 0.0);   // leaf fraction
  EXPECT_NEAR(fv.values[6], 3.0, 1e-8);  // largest eigenvalue
  EXPECT_DOUBLE_EQ(fv.values[7], 0.0);   // betweenness
  EXPECT_DOUBLE_EQ(fv.values[8], 1.0);   // closeness
  EXPECT_NEAR(fv.values[9], 0.5, 1e-8);  // eigenvector centrality (unit vector over 4 nodes)
  EXPECT_EQ(fv.schema, "attrs-v1");
}

TEST(ManualAttributes, SingleNodeDefaultsToZeros) {
  const FeatureVector fv = manual_attributes(build_graph(1, {}));
  EXPECT_DOUBLE_EQ(fv.values[0], 1.0);
  for (std::size_t i = 1; i < fv.values.size(); ++i) EXPECT_DOUBLE_EQ(fv.values[i], 0.0);
}

TEST(ManualAttributes, PermutationInvariant) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(12, 0.3, seed);
    Rng rng = make_rng(seed + 100);
    std::vector<NodeId> mapping(12);
    std::iota(mapping.begin(), mapping.end(), 0);
    std::shuffle(mapping.begin(), mapping.end(), rng);
    const FeatureVector a = manual_attributes(g);
    const FeatureVector b = manual_attributes(relabel(g, mapping));
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      EXPECT_NEAR(a.values[i], b.values[i], 1e-9) << "seed " << seed << " attr " << i;
    }
  }
}

TEST(AveragedAttributes, SingleRepeatEqualsSingleConstruction) {
  const Graph g = random_connected_graph(10, 0.3, 1);
  const AveragedAttributes avg =
      averaged_attributes(g, SamplingStrategy::random_walk(), 1, 1, 77);
  Rng rng = make_rng(derive_seed(77, "s2gn-rep", 0));
  const S2gnResult single = s2gn(g, SamplingStrategy::random_walk(), 1, rng);
  const FeatureVector expected = manual_attributes(single.graph);
  for (std::size_t i = 0; i < expected.values.size(); ++i) {
    EXPECT_DOUBLE_EQ(avg.vector.values[i], expected.values[i]);
  }
  EXPECT_TRUE(avg.reached_order);
}

TEST(AveragedAttributes, DeterministicStrategyHasZeroVariance) {
  // A tree has a unique spanning tree, so every repetition sees the same
  // substructure.
  const Graph tree = build_graph(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  const AveragedAttributes one =
      averaged_attributes(tree, SamplingStrategy::spanning_tree(), 1, 1, 5);
  const AveragedAttributes many =
      averaged_attributes(tree, SamplingStrategy::spanning_tree(), 1, 10, 5);
  for (std::size_t i = 0; i < one.vector.values.size(); ++i) {
    EXPECT_NEAR(one.vector.values[i], many.vector.values[i], 1e-12);
  }
}

TEST(AveragedAttributes, VarianceOfMeanShrinksWithRepeats) {
  const Graph g = random_connected_graph(12, 0.3, 9);
  auto spread = [&](int repeats) {
    // Empirical variance of the mean vector's first stochastic entry
    // (edge count of the substructure's line graph) across 100 trials.
    std::vector<double> samples;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      const AveragedAttributes avg = averaged_attributes(
          g, SamplingStrategy::random_walk(), 1, repeats, derive_seed(1234, "trial", trial));
      samples.push_back(avg.vector.values[1]);
    }
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / samples.size();
    double var = 0.0;
    for (double s : samples) var += (s - mean) * (s - mean);
    return var / samples.size();
  };
  const double v1 = spread(1);
  const double v10 = spread(10);
  // ~1/repeats scaling, asserted with slack for Monte-Carlo noise.
  EXPECT_LT(v10, v1 / 4.0);
}

TEST(AveragedAttributes, FlagsWhenOrderUnreachable) {
  // A single edge always collapses to one node after the first mapping, so
  // order 2 is unreachable for every repetition.
  const Graph g = build_graph(2, {{0, 1}});
  const AveragedAttributes avg =
      averaged_attributes(g, SamplingStrategy::random_walk(), 2, 5, 3);
  EXPECT_FALSE(avg.reached_order);
  EXPECT_DOUBLE_EQ(avg.vector.values[0], 1.0);  // mean over the achieved 1-node graphs
}

TEST(Fuse, SinglePartKeepsValues) {
  const FeatureVector part{{1.0, 2.0, 3.0}, "attrs-v1"};
  const FeatureVector fused = fuse({part});
  EXPECT_EQ(fused.values, part.values);
  EXPECT_EQ(fused.schema, "fused-v1");
}

TEST(Fuse, NinePartsGiveNinetyDims) {
  std::vector<FeatureVector> parts(9, FeatureVector{std::vector<double>(10, 1.0), "attrs-v1"});
  EXPECT_EQ(fuse(parts).values.size(), 90u);
}

TEST(Fuse, OrderMatters) {
  const FeatureVector a{{1.0, 0.0}, "attrs-v1"};
  const FeatureVector b{{0.0, 2.0}, "attrs-v1"};
  EXPECT_NE(fuse({a, b}).values, fuse({b, a}).values);
}

TEST(Fuse, EmptyListThrows) { EXPECT_THROW(fuse({}), std::invalid_argument); }

TEST(Pca, LineFixtureRecoversDiagonalComponent) {
  // Points on y = x: first component must align with (1, 1)/sqrt(2) and
  // the second eigenvalue must vanish.
  FeatureMatrix m;
  for (int i = 0; i < 8; ++i) {
    m.push_back({static_cast<double>(i), static_cast<double>(i)});
  }
  const PcaModel model = pca_fit(m, 1);
  ASSERT_EQ(model.components.size(), 1u);
  EXPECT_NEAR(model.components[0][0], 1.0 / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(model.components[0][1], 1.0 / std::sqrt(2.0), 1e-9);
  ASSERT_EQ(model.explained_variance.size(), 2u);
  EXPECT_NEAR(model.explained_variance[1], 0.0, 1e-9);
}

TEST(Pca, ComponentsAreOrthonormalAndSorted) {
  FeatureMatrix m;
  Rng rng = make_rng(3);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    std::vector<double> row(6);
    for (double& x : row) x = unif(rng);
    row[3] = 3.0 * row[0] + 0.1 * unif(rng);  // correlated column
    m.push_back(std::move(row));
  }
  const PcaModel model = pca_fit(m, 6);
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    for (std::size_t j = i; j < model.components.size(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < 6; ++k) dot += model.components[i][k] * model.components[j][k];
      EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-8) << i << "," << j;
    }
  }
  for (std::size_t i = 0; i + 1 < model.explained_variance.size(); ++i) {
    EXPECT_GE(model.explained_variance[i], model.explained_variance[i + 1] - 1e-12);
  }
}

TEST(Pca, FullDimensionReconstructs) {
  FeatureMatrix m;
  Rng rng = make_rng(8);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int i = 0; i < 25; ++i) {
    std::vector<double> row(5);
    for (double& x : row) x = unif(rng);
    m.push_back(std::move(row));
  }
  const PcaModel model = pca_fit(m, 5);
  for (const auto& row : m) {
    const FeatureVector y = pca_transform(model, {row, "attrs-v1"});
    // Reconstruct: x = scale * (C^T y) + mean.
    for (std::size_t j = 0; j < row.size(); ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < model.components.size(); ++r) {
        acc += model.components[r][j] * y.values[r];
      }
      const double rebuilt = acc * model.scale[j] + model.mean[j];
      EXPECT_NEAR(rebuilt, row[j], 1e-8 * std::max(1.0, std::abs(row[j])));
    }
  }
}

TEST(Pca, DuplicateRowsTransformToZero) {
  FeatureMatrix m(6, std::vector<double>{2.0, -1.0, 5.0});
  const PcaModel model = pca_fit(m, 2);
  for (double ev : model.explained_variance) EXPECT_NEAR(ev, 0.0, 1e-12);
  const FeatureVector y = pca_transform(model, {m.front(), "attrs-v1"});
  for (double x : y.values) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(Pca, RejectsBadShapes) {
  FeatureMatrix m(3, std::vector<double>{1.0, 2.0});
  EXPECT_THROW(pca_fit(m, 3), std::invalid_argument);   // target > cols
  EXPECT_THROW(pca_fit({m[0]}, 1), std::invalid_argument);  // single row
}

TEST(Pca, IdenticalPartsConcentrateVariance) {
  // Fusing 9 copies of the same 10-dim block gives a rank <= 10 matrix, so
  // at most 10 nonzero eigenvalues.
  FeatureMatrix base;
  Rng rng = make_rng(21);
  std::uniform_real_distribution<double> unif(0.0, 4.0);
  for (int i = 0; i < 30; ++i) {
    std::vector<double> row(10);
    for (double& x : row) x = unif(rng);
    base.push_back(std::move(row));
  }
  FeatureMatrix fused;
  for (const auto& row : base) {
    std::vector<double> wide;
    for (int rep = 0; rep < 9; ++rep) wide.insert(wide.end(), row.begin(), row.end());
    fused.push_back(std::move(wide));
  }
  const PcaModel model = pca_fit(fused, 10);
  double tail = 0.0;
  for (std::size_t i = 10; i < model.explained_variance.size(); ++i) {
    tail += model.explained_variance[i];
  }
  EXPECT_NEAR(tail, 0.0, 1e-8);
}

}  // namespace
}  // namespace s2gn
