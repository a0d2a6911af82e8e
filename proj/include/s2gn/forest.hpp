#pragma once

#include <cstdint>
#include <vector>

namespace s2gn {

using FeatureMatrix = std::vector<std::vector<double>>;

struct ForestConfig {
  int n_trees = 100;
  int max_depth = -1;  // unlimited when negative
  int min_samples_split = 2;
  int features_per_split = 0;  // 0 means ceil(sqrt(d))
  bool bootstrap = true;
  std::uint64_t seed = 0;
};

/// Random Forest of CART trees: Gini impurity, thresholds at midpoints
/// between consecutive sorted unique values, leaves store class counts.
/// Deterministic for a fixed seed; trees train on independent sub-seeds.
class RandomForest {
 public:
  /// Requires >= 2 rows, >= 2 distinct labels, and finite features.
  static RandomForest train(const FeatureMatrix& features, const std::vector<int>& labels,
                            const ForestConfig& cfg);

  /// Majority vote over trees; ties go to the smallest label.
  std::vector<int> predict(const FeatureMatrix& features) const;
  int predict_one(const std::vector<double>& row) const;

  int feature_count() const { return feature_count_; }

 private:
  struct Node {
    int feature = -1;       // -1 marks a leaf
    double threshold = 0.0;  // goes left when x[feature] < threshold
    int left = -1;
    int right = -1;
    std::vector<int> class_counts;  // leaves only
  };
  struct Tree {
    std::vector<Node> nodes;
  };

  int feature_count_ = 0;
  int class_count_ = 0;
  std::vector<Tree> trees_;

  friend struct ForestTrainer;
};

}  // namespace s2gn
