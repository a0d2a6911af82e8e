#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "s2gn/eval.hpp"
#include "s2gn/graph.hpp"

namespace s2gn {

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> class_labels;  // remapped to 0..n_classes-1
  int class_count = 0;
  /// Non-fatal mismatches against the published statistics of known
  /// benchmark datasets (user-supplied variants are accepted).
  std::vector<std::string> warnings;
};

/// Reads a TU-format dataset: {name}_A.txt (comma-separated 1-indexed
/// global node-id pairs), {name}_graph_indicator.txt, and
/// {name}_graph_labels.txt, plus {name}_node_labels.txt when present.
/// Per-graph node ids are rebased to 0..n-1; duplicate edge directions
/// collapse; class labels are remapped to 0..C-1 preserving sorted
/// original order. Throws std::runtime_error naming file and line on
/// malformed input.
Dataset load_tu_dataset(const std::filesystem::path& dir, const std::string& name);

/// Published statistics used to sanity-check known dataset names.
struct KnownStats {
  int n_graphs;
  int largest_class;
  int n_classes;
  double avg_nodes;
  double avg_edges;
};
std::optional<KnownStats> known_dataset_stats(const std::string& name);

struct ExportProvenance {
  std::string strategy;  // "original" when untransformed
  int order = 0;
  std::uint64_t seed = 0;
};

/// Writes one `g{index}.edges` file per graph ("u v" per line, canonical
/// order) plus an index.json mapping files to class labels, node counts,
/// and provenance. Files are written atomically (temp + rename).
void export_edge_lists(const std::vector<Graph>& graphs, const std::vector<int>& labels,
                       const std::filesystem::path& dir, const ExportProvenance& provenance);

/// Reads an export directory back; the inverse of export_edge_lists.
std::pair<std::vector<Graph>, std::vector<int>> import_edge_lists(const std::filesystem::path& dir);

/// CSV with header = column names + "label"; numbers use shortest
/// round-trip formatting.
void write_features_csv(const FeatureMatrix& matrix, const std::vector<int>& labels,
                        const std::vector<std::string>& columns, const std::filesystem::path& path);

struct FeaturesCsv {
  std::vector<std::string> columns;
  FeatureMatrix matrix;
  std::vector<int> labels;
};
FeaturesCsv read_features_csv(const std::filesystem::path& path);

/// EvalReport as a JSON document (keys: dataset, pipeline, mean_f1,
/// std_f1, per_repetition, rimp_vs_original, wall_time_seconds, seed,
/// config).
void write_report_json(const EvalReport& report, const std::string& dataset,
                       const std::string& pipeline, std::optional<double> rimp_vs_original,
                       std::uint64_t seed, const std::filesystem::path& path);

}  // namespace s2gn
