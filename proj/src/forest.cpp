#include "s2gn/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "s2gn/rng.hpp"

namespace s2gn {

namespace {

double gini(const std::vector<int>& counts, int total) {
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  for (int c : counts) {
    const double f = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += f * f;
  }
  return 1.0 - sum_sq;
}

int majority(const std::vector<int>& counts) {
  int best = 0;
  for (std::size_t c = 1; c < counts.size(); ++c) {
    if (counts[c] > counts[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
  }
  return best;  // first maximum = smallest label on ties
}

}  // namespace

struct ForestTrainer {
  const FeatureMatrix& features;
  const std::vector<int>& labels;
  const ForestConfig& cfg;
  int n_classes;
  int n_features;
  int mtry;

  RandomForest::Tree grow_tree(std::uint64_t tree_seed) const {
    Rng rng = make_rng(tree_seed);
    const std::size_t n = features.size();
    std::vector<int> rows;
    rows.reserve(n);
    if (cfg.bootstrap) {
      for (std::size_t i = 0; i < n; ++i) rows.push_back(static_cast<int>(draw_index(rng, n)));
    } else {
      rows.resize(n);
      std::iota(rows.begin(), rows.end(), 0);
    }
    RandomForest::Tree tree;
    build_node(tree, rows, 0, rng);
    return tree;
  }

  // Builds the subtree for `rows`, returns its node index.
  int build_node(RandomForest::Tree& tree, std::vector<int>& rows, int depth, Rng& rng) const {
    std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
    for (int r : rows) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(r)])];
    const int total = static_cast<int>(rows.size());

    const bool pure = *std::max_element(counts.begin(), counts.end()) == total;
    const bool depth_capped = cfg.max_depth >= 0 && depth >= cfg.max_depth;
    if (pure || total < cfg.min_samples_split || depth_capped) {
      return make_leaf(tree, std::move(counts));
    }

    // Sample mtry distinct feature columns (partial Fisher-Yates).
    std::vector<int> cols(static_cast<std::size_t>(n_features));
    std::iota(cols.begin(), cols.end(), 0);
    for (int i = 0; i < mtry; ++i) {
      const auto j = i + static_cast<int>(draw_index(rng, static_cast<std::size_t>(n_features - i)));
      std::swap(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    }

    const double parent_gini = gini(counts, total);
    int best_feature = -1;
    double best_threshold = 0.0;
    double best_score = parent_gini;

    std::vector<std::pair<double, int>> sorted;
    sorted.reserve(rows.size());
    std::vector<int> left_counts(static_cast<std::size_t>(n_classes));
    for (int ci = 0; ci < mtry; ++ci) {
      const int f = cols[static_cast<std::size_t>(ci)];
      sorted.clear();
      for (int r : rows) {
        sorted.emplace_back(features[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)],
                            labels[static_cast<std::size_t>(r)]);
      }
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::fill(left_counts.begin(), left_counts.end(), 0);
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        ++left_counts[static_cast<std::size_t>(sorted[i].second)];
        if (sorted[i].first == sorted[i + 1].first) continue;
        const int nl = static_cast<int>(i + 1);
        const int nr = total - nl;
        double score = 0.0;
        {
          double sum_sq_l = 0.0, sum_sq_r = 0.0;
          for (std::size_t c = 0; c < left_counts.size(); ++c) {
            const double l = static_cast<double>(left_counts[c]);
            const double r = static_cast<double>(counts[c] - left_counts[c]);
            sum_sq_l += l * l;
            sum_sq_r += r * r;
          }
          const double gini_l = 1.0 - sum_sq_l / (static_cast<double>(nl) * nl);
          const double gini_r = 1.0 - sum_sq_r / (static_cast<double>(nr) * nr);
          score = (nl * gini_l + nr * gini_r) / static_cast<double>(total);
        }
        if (score < best_score - 1e-12) {
          best_score = score;
          best_feature = f;
          best_threshold = (sorted[i].first + sorted[i + 1].first) / 2.0;
        }
      }
    }

    if (best_feature < 0) {  // no improving split among the sampled columns
      return make_leaf(tree, std::move(counts));
    }

    std::vector<int> left_rows, right_rows;
    for (int r : rows) {
      const double x = features[static_cast<std::size_t>(r)][static_cast<std::size_t>(best_feature)];
      (x < best_threshold ? left_rows : right_rows).push_back(r);
    }
    if (left_rows.empty() || right_rows.empty()) {
      return make_leaf(tree, std::move(counts));
    }
    rows.clear();
    rows.shrink_to_fit();

    const int me = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[static_cast<std::size_t>(me)].feature = best_feature;
    tree.nodes[static_cast<std::size_t>(me)].threshold = best_threshold;
    const int l = build_node(tree, left_rows, depth + 1, rng);
    const int r = build_node(tree, right_rows, depth + 1, rng);
    tree.nodes[static_cast<std::size_t>(me)].left = l;
    tree.nodes[static_cast<std::size_t>(me)].right = r;
    return me;
  }

  static int make_leaf(RandomForest::Tree& tree, std::vector<int>&& counts) {
    const int me = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[static_cast<std::size_t>(me)].class_counts = std::move(counts);
    return me;
  }
};

RandomForest RandomForest::train(const FeatureMatrix& features, const std::vector<int>& labels,
                                 const ForestConfig& cfg) {
  if (features.size() < 2) throw std::invalid_argument("training needs at least 2 rows");
  if (features.size() != labels.size()) {
    throw std::invalid_argument("feature row count does not match label count");
  }
  if (cfg.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
  if (cfg.min_samples_split < 2) throw std::invalid_argument("min_samples_split must be >= 2");

  const std::size_t d = features.front().size();
  int max_label = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].size() != d) throw std::invalid_argument("feature rows have inconsistent widths");
    for (double x : features[i]) {
      if (!std::isfinite(x)) throw std::invalid_argument("non-finite feature value");
    }
    if (labels[i] < 0) throw std::invalid_argument("labels must be non-negative");
    max_label = std::max(max_label, labels[i]);
  }
  if (std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels.front(); })) {
    throw std::invalid_argument("training needs at least 2 classes");
  }

  RandomForest forest;
  forest.feature_count_ = static_cast<int>(d);
  forest.class_count_ = max_label + 1;

  ForestTrainer trainer{features, labels, cfg, forest.class_count_, static_cast<int>(d),
                        cfg.features_per_split > 0
                            ? std::min(cfg.features_per_split, static_cast<int>(d))
                            : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))))};
  forest.trees_.resize(static_cast<std::size_t>(cfg.n_trees));
  for (int t = 0; t < cfg.n_trees; ++t) {
    forest.trees_[static_cast<std::size_t>(t)] =
        trainer.grow_tree(derive_seed(cfg.seed, "tree", static_cast<std::uint64_t>(t)));
  }
  return forest;
}

int RandomForest::predict_one(const std::vector<double>& row) const {
  if (static_cast<int>(row.size()) != feature_count_) {
    throw std::invalid_argument("prediction row width does not match training width");
  }
  std::vector<int> votes(static_cast<std::size_t>(class_count_), 0);
  for (const Tree& tree : trees_) {
    int node = 0;
    while (tree.nodes[static_cast<std::size_t>(node)].feature >= 0) {
      const Node& nd = tree.nodes[static_cast<std::size_t>(node)];
      node = row[static_cast<std::size_t>(nd.feature)] < nd.threshold ? nd.left : nd.right;
    }
    ++votes[static_cast<std::size_t>(majority(tree.nodes[static_cast<std::size_t>(node)].class_counts))];
  }
  return majority(votes);
}

std::vector<int> RandomForest::predict(const FeatureMatrix& features) const {
  std::vector<int> out;
  out.reserve(features.size());
  for (const auto& row : features) out.push_back(predict_one(row));
  return out;
}

}  // namespace s2gn
