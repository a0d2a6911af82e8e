#include "s2gn/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace s2gn {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::filesystem::path& file, std::size_t line_no,
                             const std::string& what) {
  throw std::runtime_error(file.string() + ":" + std::to_string(line_no) + ": " + what);
}

std::ifstream open_or_throw(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  return in;
}

// Reads one integer per line.
std::vector<int> read_int_column(const std::filesystem::path& file) {
  std::ifstream in = open_or_throw(file);
  std::vector<int> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    int value = 0;
    const char* begin = line.data();
    const char* end = line.data() + line.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) parse_fail(file, line_no, "expected an integer, got '" + line + "'");
    out.push_back(value);
  }
  return out;
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

// Atomic text write: temp file in the same directory, then rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::optional<KnownStats> known_dataset_stats(const std::string& name) {
  static const std::map<std::string, KnownStats> table = {
      {"MUTAG", {188, 125, 2, 18.0, 20.0}},       {"PTC", {344, 192, 2, 14.0, 14.0}},
      {"PROTEINS", {1113, 663, 2, 39.0, 73.0}},   {"ENZYMES", {600, 100, 6, 32.0, 63.0}},
      {"NCI1", {4110, 2057, 2, 30.0, 32.0}},      {"NCI109", {4127, 2079, 2, 30.0, 32.0}},
      {"IMDB-BINARY", {1000, 500, 2, 20.0, 193.0}}, {"DD", {1178, 691, 2, 284.0, 716.0}},
  };
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Dataset load_tu_dataset(const std::filesystem::path& dir, const std::string& name) {
  const auto base = dir / name;
  const auto a_file = std::filesystem::path(base.string() + "_A.txt");
  const auto indicator_file = std::filesystem::path(base.string() + "_graph_indicator.txt");
  const auto labels_file = std::filesystem::path(base.string() + "_graph_labels.txt");
  const auto node_labels_file = std::filesystem::path(base.string() + "_node_labels.txt");

  const std::vector<int> indicator = read_int_column(indicator_file);
  const std::vector<int> raw_labels = read_int_column(labels_file);
  if (raw_labels.empty()) throw std::runtime_error(labels_file.string() + ": no graph labels");
  const int n_graphs = static_cast<int>(raw_labels.size());

  // Global node k (1-indexed) belongs to graph indicator[k-1] (1-indexed).
  std::vector<int> graph_of(indicator.size());
  std::vector<int> local_id(indicator.size());
  std::vector<int> node_count(static_cast<std::size_t>(n_graphs), 0);
  for (std::size_t k = 0; k < indicator.size(); ++k) {
    const int gid = indicator[k];
    if (gid < 1 || gid > n_graphs) {
      parse_fail(indicator_file, k + 1,
                 "node " + std::to_string(k + 1) + " references graph " + std::to_string(gid) +
                     " outside 1.." + std::to_string(n_graphs));
    }
    graph_of[k] = gid - 1;
    local_id[k] = node_count[static_cast<std::size_t>(gid - 1)]++;
  }

  std::vector<std::vector<std::pair<NodeId, NodeId>>> edges(static_cast<std::size_t>(n_graphs));
  {
    std::ifstream in = open_or_throw(a_file);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line == "\r") continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ss(line);
      long long u = 0, v = 0;
      if (!(ss >> u >> v)) parse_fail(a_file, line_no, "expected 'u, v', got '" + line + "'");
      if (u < 1 || v < 1 || u > static_cast<long long>(indicator.size()) ||
          v > static_cast<long long>(indicator.size())) {
        parse_fail(a_file, line_no, "node id out of range in '" + line + "'");
      }
      const auto ui = static_cast<std::size_t>(u - 1);
      const auto vi = static_cast<std::size_t>(v - 1);
      if (graph_of[ui] != graph_of[vi]) {
        parse_fail(a_file, line_no, "edge joins nodes of different graphs");
      }
      edges[static_cast<std::size_t>(graph_of[ui])].emplace_back(local_id[ui], local_id[vi]);
    }
  }

  Dataset ds;
  ds.name = name;
  ds.graphs.reserve(static_cast<std::size_t>(n_graphs));
  for (int g = 0; g < n_graphs; ++g) {
    ds.graphs.push_back(
        build_graph(node_count[static_cast<std::size_t>(g)], edges[static_cast<std::size_t>(g)]));
  }

  if (std::filesystem::exists(node_labels_file)) {
    const std::vector<int> node_labels = read_int_column(node_labels_file);
    if (node_labels.size() == indicator.size()) {
      std::vector<std::vector<int>> per_graph(static_cast<std::size_t>(n_graphs));
      for (int g = 0; g < n_graphs; ++g) {
        per_graph[static_cast<std::size_t>(g)].resize(
            static_cast<std::size_t>(node_count[static_cast<std::size_t>(g)]));
      }
      for (std::size_t k = 0; k < node_labels.size(); ++k) {
        per_graph[static_cast<std::size_t>(graph_of[k])][static_cast<std::size_t>(local_id[k])] =
            node_labels[k];
      }
      for (int g = 0; g < n_graphs; ++g) {
        ds.graphs[static_cast<std::size_t>(g)].set_node_labels(
            std::move(per_graph[static_cast<std::size_t>(g)]));
      }
    } else {
      ds.warnings.push_back(node_labels_file.string() + ": node label count does not match node count");
    }
  }

  // Remap class labels onto 0..C-1 preserving sorted original order.
  std::vector<int> uniq(raw_labels);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  ds.class_count = static_cast<int>(uniq.size());
  ds.class_labels.reserve(raw_labels.size());
  for (int raw : raw_labels) {
    const auto it = std::lower_bound(uniq.begin(), uniq.end(), raw);
    ds.class_labels.push_back(static_cast<int>(it - uniq.begin()));
  }

  if (const auto known = known_dataset_stats(name)) {
    std::vector<int> class_sizes(static_cast<std::size_t>(ds.class_count), 0);
    for (int c : ds.class_labels) ++class_sizes[static_cast<std::size_t>(c)];
    const int largest = *std::max_element(class_sizes.begin(), class_sizes.end());
    double nodes = 0.0, edge_total = 0.0;
    for (const Graph& g : ds.graphs) {
      nodes += g.node_count();
      edge_total += g.edge_count();
    }
    nodes /= static_cast<double>(n_graphs);
    edge_total /= static_cast<double>(n_graphs);
    auto warn = [&](const std::string& msg) { ds.warnings.push_back(name + ": " + msg); };
    if (n_graphs != known->n_graphs) {
      warn("expected " + std::to_string(known->n_graphs) + " graphs, found " + std::to_string(n_graphs));
    }
    if (ds.class_count != known->n_classes) {
      warn("expected " + std::to_string(known->n_classes) + " classes, found " +
           std::to_string(ds.class_count));
    }
    if (largest != known->largest_class) {
      warn("expected largest class of " + std::to_string(known->largest_class) + ", found " +
           std::to_string(largest));
    }
    if (std::abs(nodes - known->avg_nodes) > 1.0) {
      warn("mean node count " + format_double(nodes) + " deviates from published " +
           format_double(known->avg_nodes));
    }
    if (std::abs(edge_total - known->avg_edges) > 1.0) {
      warn("mean edge count " + format_double(edge_total) + " deviates from published " +
           format_double(known->avg_edges));
    }
  }
  return ds;
}

void export_edge_lists(const std::vector<Graph>& graphs, const std::vector<int>& labels,
                       const std::filesystem::path& dir, const ExportProvenance& provenance) {
  if (graphs.size() != labels.size()) {
    throw std::invalid_argument("export: graph count does not match label count");
  }
  std::filesystem::create_directories(dir);
  json index;
  index["strategy"] = provenance.strategy;
  index["order"] = provenance.order;
  index["seed"] = provenance.seed;
  index["files"] = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string file_name = "g" + std::to_string(i) + ".edges";
    std::string body;
    for (const EdgeKey& e : graphs[i].edges()) {
      body += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    write_text_atomic(dir / file_name, body);
    index["files"].push_back({{"file", file_name},
                              {"label", labels[i]},
                              {"node_count", graphs[i].node_count()}});
  }
  write_text_atomic(dir / "index.json", index.dump(2) + "\n");
}

std::pair<std::vector<Graph>, std::vector<int>> import_edge_lists(const std::filesystem::path& dir) {
  std::ifstream in = open_or_throw(dir / "index.json");
  json index = json::parse(in);
  std::vector<Graph> graphs;
  std::vector<int> labels;
  for (const auto& entry : index.at("files")) {
    const std::filesystem::path file = dir / entry.at("file").get<std::string>();
    std::ifstream ef = open_or_throw(file);
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ef, line)) {
      ++line_no;
      if (line.empty()) continue;
      std::istringstream ss(line);
      NodeId u = 0, v = 0;
      if (!(ss >> u >> v)) parse_fail(file, line_no, "expected 'u v', got '" + line + "'");
      edges.emplace_back(u, v);
    }
    graphs.push_back(build_graph(entry.at("node_count").get<int>(), edges));
    labels.push_back(entry.at("label").get<int>());
  }
  return {std::move(graphs), std::move(labels)};
}

void write_features_csv(const FeatureMatrix& matrix, const std::vector<int>& labels,
                        const std::vector<std::string>& columns, const std::filesystem::path& path) {
  if (matrix.size() != labels.size()) {
    throw std::invalid_argument("CSV export: row count does not match label count");
  }
  std::string body;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    body += columns[j];
    body += ',';
  }
  body += "label\n";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != columns.size()) {
      throw std::invalid_argument("CSV export: row " + std::to_string(i) + " width mismatch");
    }
    for (double x : matrix[i]) {
      body += format_double(x);
      body += ',';
    }
    body += std::to_string(labels[i]);
    body += '\n';
  }
  write_text_atomic(path, body);
}

FeaturesCsv read_features_csv(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  FeaturesCsv out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (line_no == 1) {
      if (cells.empty() || cells.back() != "label") {
        parse_fail(path, line_no, "header must end with 'label'");
      }
      out.columns.assign(cells.begin(), cells.end() - 1);
      continue;
    }
    if (cells.size() != out.columns.size() + 1) {
      parse_fail(path, line_no, "expected " + std::to_string(out.columns.size() + 1) + " cells");
    }
    std::vector<double> row(out.columns.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& cell = cells[j];
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), row[j]);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        parse_fail(path, line_no, "bad number '" + cell + "'");
      }
    }
    int label = 0;
    const auto& cell = cells.back();
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), label);
    if (ec != std::errc()) parse_fail(path, line_no, "bad label '" + cell + "'");
    out.matrix.push_back(std::move(row));
    out.labels.push_back(label);
  }
  if (out.columns.empty()) throw std::runtime_error(path.string() + ": missing header");
  return out;
}

void write_report_json(const EvalReport& report, const std::string& dataset,
                       const std::string& pipeline, std::optional<double> rimp_vs_original,
                       std::uint64_t seed, const std::filesystem::path& path) {
  json doc;
  doc["dataset"] = dataset;
  doc["pipeline"] = pipeline;
  doc["mean_f1"] = report.mean_f1;
  doc["std_f1"] = report.std_f1;
  doc["per_repetition"] = report.per_repetition;
  doc["rimp_vs_original"] = rimp_vs_original ? json(*rimp_vs_original) : json();
  doc["wall_time_seconds"] = report.wall_time_seconds;
  doc["seed"] = seed;
  doc["config"] = report.config_fingerprint;
  if (report.stratification_fallback) doc["stratification_fallback"] = true;
  write_text_atomic(path, doc.dump(2) + "\n");
}

}  // namespace s2gn
