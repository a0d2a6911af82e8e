#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s2gn/forest.hpp"

namespace s2gn {

enum class F1Averaging { binary, macro };

struct EvalConfig {
  double test_fraction = 0.2;
  int repetitions = 100;
  bool stratified = true;
  F1Averaging averaging = F1Averaging::binary;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct EvalReport {
  double mean_f1 = 0.0;
  double std_f1 = 0.0;
  std::vector<double> per_repetition;
  double wall_time_seconds = 0.0;
  std::string config_fingerprint;
  bool stratification_fallback = false;  // some repetition could not stratify
};

/// F1 = 2PR/(P+R). Binary mode scores the positive class (the largest
/// label id); macro mode is the unweighted mean of per-class F1 over the
/// label universe in `truth`. Zero-denominator cases score 0.
double f1_score(const std::vector<int>& truth, const std::vector<int>& pred, F1Averaging averaging);

/// Repeated stratified holdout: per repetition, split on the sub-seed
/// (seed, "eval-rep", rep), train a forest, and score the holdout.
/// Falls back to an unstratified split (with a report flag) when a class
/// has fewer than 2 members.
EvalReport evaluate(const FeatureMatrix& features, const std::vector<int>& labels,
                    const EvalConfig& eval_cfg, const ForestConfig& forest_cfg);

/// Relative improvement rate (f1_model - f1_ori) / f1_ori. Throws when
/// f1_ori <= 0.
double rimp(double f1_model, double f1_ori);

}  // namespace s2gn
