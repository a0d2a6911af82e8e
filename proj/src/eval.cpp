#include "s2gn/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "s2gn/parallel.hpp"
#include "s2gn/rng.hpp"

namespace s2gn {

namespace {

struct PrfCounts {
  long long tp = 0, fp = 0, fn = 0;
  double f1() const {
    const double denom = 2.0 * static_cast<double>(tp) + static_cast<double>(fp) + static_cast<double>(fn);
    return denom > 0.0 ? 2.0 * static_cast<double>(tp) / denom : 0.0;
  }
};

}  // namespace

double f1_score(const std::vector<int>& truth, const std::vector<int>& pred,
                F1Averaging averaging) {
  if (truth.size() != pred.size()) throw std::invalid_argument("f1_score: length mismatch");
  if (truth.empty()) throw std::invalid_argument("f1_score: empty input");

  std::map<int, PrfCounts> per_class;
  for (int t : truth) per_class[t];
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == pred[i]) {
      ++per_class[truth[i]].tp;
    } else {
      ++per_class[truth[i]].fn;
      ++per_class[pred[i]].fp;  // creates the entry if pred names an unseen class
    }
  }
  if (averaging == F1Averaging::binary) {
    int positive = truth.front();
    for (int t : truth) positive = std::max(positive, t);
    return per_class[positive].f1();
  }
  // Macro over the classes present in the truth labels.
  std::set<int> classes(truth.begin(), truth.end());
  double sum = 0.0;
  for (int c : classes) sum += per_class[c].f1();
  return sum / static_cast<double>(classes.size());
}

namespace {

// Returns test-set row indices; sets `fell_back` when stratification was
// impossible for some class.
std::vector<int> holdout_indices(const std::vector<int>& labels, double test_fraction,
                                 bool stratified, Rng& rng, bool& fell_back) {
  const int n = static_cast<int>(labels.size());
  std::map<int, std::vector<int>> by_class;
  for (int i = 0; i < n; ++i) by_class[labels[static_cast<std::size_t>(i)]].push_back(i);

  bool can_stratify = stratified;
  for (const auto& [cls, members] : by_class) {
    if (members.size() < 2) can_stratify = false;
  }
  if (stratified && !can_stratify) fell_back = true;

  std::vector<int> test;
  if (can_stratify) {
    for (auto& [cls, members] : by_class) {
      std::shuffle(members.begin(), members.end(), rng);
      int take = static_cast<int>(std::floor(test_fraction * static_cast<double>(members.size()) + 0.5));
      take = std::clamp(take, 1, static_cast<int>(members.size()) - 1);
      test.insert(test.end(), members.begin(), members.begin() + take);
    }
  } else {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    int take = static_cast<int>(std::floor(test_fraction * static_cast<double>(n) + 0.5));
    take = std::clamp(take, 1, n - 1);
    test.assign(all.begin(), all.begin() + take);
  }
  std::sort(test.begin(), test.end());
  return test;
}

}  // namespace

EvalReport evaluate(const FeatureMatrix& features, const std::vector<int>& labels,
                    const EvalConfig& eval_cfg, const ForestConfig& forest_cfg) {
  if (features.size() != labels.size() || features.size() < 2) {
    throw std::invalid_argument("evaluate: need matching features/labels with >= 2 rows");
  }
  if (eval_cfg.repetitions < 1) throw std::invalid_argument("evaluate: repetitions must be >= 1");
  if (eval_cfg.test_fraction <= 0.0 || eval_cfg.test_fraction >= 1.0) {
    throw std::invalid_argument("evaluate: test_fraction must lie in (0, 1)");
  }

  const auto started = std::chrono::steady_clock::now();
  EvalReport report;
  report.per_repetition.assign(static_cast<std::size_t>(eval_cfg.repetitions), 0.0);
  std::vector<char> fallback(static_cast<std::size_t>(eval_cfg.repetitions), 0);

  parallel_for(eval_cfg.repetitions, eval_cfg.threads, [&](int rep) {
    Rng rng = make_rng(derive_seed(eval_cfg.seed, "eval-rep", static_cast<std::uint64_t>(rep)));
    bool fell_back = false;
    const std::vector<int> test =
        holdout_indices(labels, eval_cfg.test_fraction, eval_cfg.stratified, rng, fell_back);
    fallback[static_cast<std::size_t>(rep)] = fell_back ? 1 : 0;

    std::vector<char> in_test(labels.size(), 0);
    for (int i : test) in_test[static_cast<std::size_t>(i)] = 1;
    FeatureMatrix train_x, test_x;
    std::vector<int> train_y, test_y;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (in_test[i]) {
        test_x.push_back(features[i]);
        test_y.push_back(labels[i]);
      } else {
        train_x.push_back(features[i]);
        train_y.push_back(labels[i]);
      }
    }

    ForestConfig rep_cfg = forest_cfg;
    rep_cfg.seed = derive_seed(eval_cfg.seed, "forest-rep", static_cast<std::uint64_t>(rep));
    const RandomForest model = RandomForest::train(train_x, train_y, rep_cfg);
    const std::vector<int> pred = model.predict(test_x);
    report.per_repetition[static_cast<std::size_t>(rep)] = f1_score(test_y, pred, eval_cfg.averaging);
  });

  report.stratification_fallback = std::any_of(fallback.begin(), fallback.end(), [](char f) { return f != 0; });
  const double n = static_cast<double>(eval_cfg.repetitions);
  report.mean_f1 = std::accumulate(report.per_repetition.begin(), report.per_repetition.end(), 0.0) / n;
  double var = 0.0;
  for (double f : report.per_repetition) var += (f - report.mean_f1) * (f - report.mean_f1);
  report.std_f1 = std::sqrt(var / n);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::ostringstream fp;
  fp << "trees=" << forest_cfg.n_trees << ";depth=" << forest_cfg.max_depth
     << ";min_split=" << forest_cfg.min_samples_split << ";mtry=" << forest_cfg.features_per_split
     << ";bootstrap=" << (forest_cfg.bootstrap ? 1 : 0) << ";reps=" << eval_cfg.repetitions
     << ";test_fraction=" << eval_cfg.test_fraction << ";stratified=" << (eval_cfg.stratified ? 1 : 0)
     << ";averaging=" << (eval_cfg.averaging == F1Averaging::binary ? "binary" : "macro")
     << ";seed=" << eval_cfg.seed;
  report.config_fingerprint = fp.str();
  return report;
}

double rimp(double f1_model, double f1_ori) {
  if (f1_ori <= 0.0) throw std::invalid_argument("rimp: baseline F1 must be positive");
  return (f1_model - f1_ori) / f1_ori;
}

}  // namespace s2gn
