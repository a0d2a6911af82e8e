#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "s2gn/dataset_io.hpp"
#include "s2gn/features.hpp"
#include "s2gn/parallel.hpp"
#include "s2gn/sgn.hpp"

namespace {

namespace fs = std::filesystem;
using namespace s2gn;

constexpr int kExitOk = 0;
constexpr int kExitPipeline = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string data_dir;
  std::string dataset;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = default
};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("S2GN_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return default_thread_count();
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Dataset load_or_exit(const CommonOptions& opt) {
  const fs::path dir(opt.data_dir);
  const fs::path a_file = dir / (opt.dataset + "_A.txt");
  if (!fs::exists(a_file)) {
    std::cerr << "error: dataset file not found: " << a_file.string() << "\n";
    std::exit(kExitUsage);
  }
  Dataset ds = load_tu_dataset(dir, opt.dataset);
  for (const std::string& warning : ds.warnings) std::cerr << "warning: " << warning << "\n";
  return ds;
}

std::vector<SamplingStrategy> parse_strategies(const std::vector<std::string>& tags, double p,
                                               double q) {
  // Canonical order rw, bw, ls, st regardless of how flags were given.
  std::vector<SamplingStrategy> out;
  for (const char* tag : {"rw", "bw", "ls", "st"}) {
    if (std::find(tags.begin(), tags.end(), tag) != tags.end()) {
      out.push_back(parse_strategy(tag, p, q));
    }
  }
  for (const std::string& tag : tags) {
    if (tag != "rw" && tag != "bw" && tag != "ls" && tag != "st" && tag != "none" && !tag.empty()) {
      throw CLI::ValidationError("--strategies", "unknown strategy '" + tag + "'");
    }
  }
  return out;
}

int cmd_transform(const CommonOptions& opt, const std::vector<std::string>& strategy_tags,
                  const std::vector<int>& orders, double p, double q) {
  const Dataset ds = load_or_exit(opt);
  const int threads = resolve_threads(opt.threads);
  const auto t0 = std::chrono::steady_clock::now();
  for (const SamplingStrategy& strategy : parse_strategies(strategy_tags, p, q)) {
    for (int order : orders) {
      std::vector<Graph> transformed(ds.graphs.size());
      parallel_for(static_cast<int>(ds.graphs.size()), threads, [&](int i) {
        Rng rng = make_rng(derive_seed(opt.seed, "transform-" + strategy.tag() + std::to_string(order),
                                       static_cast<std::uint64_t>(i)));
        transformed[static_cast<std::size_t>(i)] =
            ::s2gn::s2gn(ds.graphs[static_cast<std::size_t>(i)], strategy, order, rng).graph;
      });
      const fs::path dir = fs::path(opt.out_dir) / (opt.dataset + "_" + strategy.tag() + std::to_string(order));
      export_edge_lists(transformed, ds.class_labels, dir, {strategy.tag(), order, opt.seed});
      std::cout << "wrote " << transformed.size() << " graphs to " << dir.string() << "\n";
    }
  }
  std::cout << opt.dataset << ": transform took " << seconds_since(t0) << " s\n";
  return kExitOk;
}

int cmd_featurize(const CommonOptions& opt, const std::vector<std::string>& strategy_tags,
                  const std::vector<int>& orders, int repeats, double p, double q, bool no_pca) {
  const Dataset ds = load_or_exit(opt);
  const int threads = resolve_threads(opt.threads);
  const std::vector<SamplingStrategy> strategies = parse_strategies(strategy_tags, p, q);

  std::vector<std::string> columns;
  for (const std::string& attr : attribute_names()) columns.push_back("orig_" + attr);
  for (const SamplingStrategy& strategy : strategies) {
    for (int order : orders) {
      for (const std::string& attr : attribute_names()) {
        columns.push_back(strategy.tag() + std::to_string(order) + "_" + attr);
      }
    }
  }

  FeatureMatrix fused(ds.graphs.size());
  parallel_for(static_cast<int>(ds.graphs.size()), threads, [&](int i) {
    const Graph& g = ds.graphs[static_cast<std::size_t>(i)];
    std::vector<FeatureVector> parts{manual_attributes(g)};
    for (const SamplingStrategy& strategy : strategies) {
      for (int order : orders) {
        const std::uint64_t base = derive_seed(
            opt.seed, "feat-" + strategy.tag() + std::to_string(order), static_cast<std::uint64_t>(i));
        parts.push_back(averaged_attributes(g, strategy, order, repeats, base).vector);
      }
    }
    fused[static_cast<std::size_t>(i)] = fuse(parts).values;
  });

  fs::create_directories(opt.out_dir);
  const bool apply_pca = !no_pca && fused.front().size() > static_cast<std::size_t>(kAttributeDim);
  std::string name = opt.dataset + (strategies.empty() ? "_original" : "_fused");
  if (apply_pca) {
    const PcaModel model = pca_fit(fused, kAttributeDim);
    FeatureMatrix reduced(fused.size());
    for (std::size_t i = 0; i < fused.size(); ++i) {
      reduced[i] = pca_transform(model, {fused[i], "fused-v1"}).values;
    }
    fused = std::move(reduced);
    columns.clear();
    for (int j = 0; j < kAttributeDim; ++j) columns.push_back("pc" + std::to_string(j));
    name += "_pca";
  }
  const fs::path csv = fs::path(opt.out_dir) / (name + ".csv");
  write_features_csv(fused, ds.class_labels, columns, csv);
  std::cout << "wrote " << fused.size() << " x " << columns.size() << " feature matrix to "
            << csv.string() << "\n";
  return kExitOk;
}

EvalReport run_eval(const FeaturesCsv& data, int repetitions, double test_fraction, int trees,
                    const std::string& averaging, std::uint64_t seed, int threads) {
  int max_label = 0;
  for (int l : data.labels) max_label = std::max(max_label, l);
  EvalConfig ec;
  ec.repetitions = repetitions;
  ec.test_fraction = test_fraction;
  ec.seed = seed;
  ec.threads = threads;
  ec.averaging = averaging == "macro" || (averaging == "auto" && max_label > 1)
                     ? F1Averaging::macro
                     : F1Averaging::binary;
  ForestConfig fc;
  fc.n_trees = trees;
  return evaluate(data.matrix, data.labels, ec, fc);
}

int cmd_classify(const CommonOptions& opt, const std::string& features_csv,
                 const std::string& original_csv, const std::string& fusion_csv, int repetitions,
                 double test_fraction, int trees, const std::string& averaging) {
  const int threads = resolve_threads(opt.threads);
  fs::create_directories(opt.out_dir);

  auto evaluate_file = [&](const std::string& path, const std::string& pipeline,
                           std::optional<double>& mean_out) {
    const FeaturesCsv data = read_features_csv(path);
    const EvalReport report =
        run_eval(data, repetitions, test_fraction, trees, averaging, opt.seed, threads);
    mean_out = report.mean_f1;
    std::cout << pipeline << ": mean F1 " << report.mean_f1 * 100.0 << "% +- "
              << report.std_f1 * 100.0 << " (" << repetitions << " reps)\n";
    return report;
  };

  std::optional<double> original_mean, fusion_mean;
  if (!features_csv.empty()) {
    const EvalReport report = evaluate_file(features_csv, "features", fusion_mean);
    write_report_json(report, opt.dataset, fs::path(features_csv).stem().string(), std::nullopt,
                      opt.seed, fs::path(opt.out_dir) / "report.json");
  }
  if (!original_csv.empty()) {
    const EvalReport report = evaluate_file(original_csv, "original", original_mean);
    write_report_json(report, opt.dataset, "original", std::nullopt, opt.seed,
                      fs::path(opt.out_dir) / "report_original.json");
  }
  if (!fusion_csv.empty()) {
    const EvalReport report = evaluate_file(fusion_csv, "fusion", fusion_mean);
    std::optional<double> r;
    if (original_mean && *original_mean > 0.0) r = rimp(*fusion_mean, *original_mean);
    write_report_json(report, opt.dataset, "fusion", r, opt.seed,
                      fs::path(opt.out_dir) / "report_fusion.json");
    if (r) std::cout << "RIMP vs original: " << *r * 100.0 << "%\n";
  }
  return kExitOk;
}

int cmd_bench(const CommonOptions& opt, const std::vector<std::string>& strategy_tags, double p,
              double q) {
  const Dataset ds = load_or_exit(opt);
  nlohmann::json table;
  table["dataset"] = opt.dataset;

  const auto t0 = std::chrono::steady_clock::now();
  long long exact_nodes = 0;  // keeps the loop from being optimized away
  for (const Graph& g : ds.graphs) exact_nodes += sgn_exact(g, 2).node_count();
  const double exact_seconds = seconds_since(t0);
  table["sgn_exact_seconds"] = exact_seconds;

  std::cout << "| method | seconds |\n|---|---|\n";
  std::cout << "| SGN exact (order 2) | " << exact_seconds << " |\n";
  for (const SamplingStrategy& strategy : parse_strategies(strategy_tags, p, q)) {
    const auto t1 = std::chrono::steady_clock::now();
    long long sampled_nodes = 0;
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) {
      Rng rng = make_rng(derive_seed(opt.seed, "bench-" + strategy.tag(), i));
      sampled_nodes += ::s2gn::s2gn(ds.graphs[i], strategy, 2, rng).graph.node_count();
    }
    const double sampled_seconds = seconds_since(t1);
    table["s2gn_seconds"][strategy.tag()] = sampled_seconds;
    table["ratio"][strategy.tag()] = sampled_seconds > 0.0 ? exact_seconds / sampled_seconds : 0.0;
    std::cout << "| S2GN-" << strategy.tag() << " (order 2) | " << sampled_seconds << " |\n";
    (void)sampled_nodes;
  }
  (void)exact_nodes;

  fs::create_directories(opt.out_dir);
  const fs::path path = fs::path(opt.out_dir) / (opt.dataset + "_bench.json");
  std::ofstream out(path);
  out << table.dump(2) << "\n";
  std::cout << "wrote " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling subgraph network toolkit: graph transformation, feature fusion, and "
               "classification on TU-format datasets"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::vector<std::string> strategies{"rw", "bw", "ls", "st"};
  std::vector<int> orders{1, 2};
  double p = 4.0, q = 1.0;
  int repeats = 10;
  bool no_pca = false;
  std::string features_csv, original_csv, fusion_csv;
  int repetitions = 100;
  double test_fraction = 0.2;
  int trees = 100;
  std::string averaging = "auto";

  auto add_common = [&](CLI::App* cmd, bool needs_data) {
    if (needs_data) {
      cmd->add_option("--data", opt.data_dir, "directory with TU-format dataset files")->required();
      cmd->add_option("--dataset", opt.dataset, "dataset name (file prefix)")->required();
    }
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_option("--seed", opt.seed, "top-level seed; all sub-seeds derive from it");
    cmd->add_option("--threads", opt.threads, "worker cap (default: S2GN_THREADS or hardware)");
  };

  CLI::App* transform = app.add_subcommand("transform", "export S2GN edge lists per strategy/order");
  add_common(transform, true);
  transform->add_option("--strategy,--strategies", strategies, "subset of rw,bw,ls,st")
      ->delimiter(',');
  transform->add_option("--order,--orders", orders, "subset of 1,2")->delimiter(',');
  transform->add_option("--p", p, "biased-walk return parameter");
  transform->add_option("--q", q, "biased-walk in-out parameter");

  CLI::App* featurize = app.add_subcommand("featurize", "extract fused attribute vectors to CSV");
  add_common(featurize, true);
  featurize->add_option("--strategies", strategies, "subset of rw,bw,ls,st (empty = original only)")
      ->delimiter(',');
  featurize->add_option("--orders", orders, "subset of 1,2")->delimiter(',');
  featurize->add_option("--repeats", repeats, "sampling averaging repetitions per strategy/order");
  featurize->add_option("--p", p, "biased-walk return parameter");
  featurize->add_option("--q", q, "biased-walk in-out parameter");
  featurize->add_flag("--no-pca", no_pca, "keep the raw fused width");

  CLI::App* classify = app.add_subcommand("classify", "random-forest evaluation of a features CSV");
  add_common(classify, false);
  classify->add_option("--dataset", opt.dataset, "dataset name for the report");
  classify->add_option("--features", features_csv, "features CSV to evaluate");
  classify->add_option("--original", original_csv, "baseline features CSV");
  classify->add_option("--fusion", fusion_csv, "fusion features CSV (prints RIMP when --original given)");
  classify->add_option("--repetitions", repetitions, "holdout repetitions");
  classify->add_option("--test-fraction", test_fraction, "holdout fraction");
  classify->add_option("--trees", trees, "forest size");
  classify->add_option("--averaging", averaging, "binary | macro | auto");

  CLI::App* bench = app.add_subcommand("bench", "time exact SGN vs sampled construction");
  add_common(bench, true);
  bench->add_option("--strategies", strategies, "subset of rw,bw,ls,st")->delimiter(',');
  bench->add_option("--p", p, "biased-walk return parameter");
  bench->add_option("--q", q, "biased-walk in-out parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(transform)) return cmd_transform(opt, strategies, orders, p, q);
    if (app.got_subcommand(featurize)) {
      return cmd_featurize(opt, strategies, orders, repeats, p, q, no_pca);
    }
    if (app.got_subcommand(classify)) {
      if (features_csv.empty() && original_csv.empty() && fusion_csv.empty()) {
        std::cerr << "error: classify needs --features, --original, or --fusion\n";
        return kExitUsage;
      }
      return cmd_classify(opt, features_csv, original_csv, fusion_csv, repetitions, test_fraction,
                          trees, averaging);
    }
    if (app.got_subcommand(bench)) return cmd_bench(opt, strategies, p, q);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipeline;
  }
  return kExitOk;
}
