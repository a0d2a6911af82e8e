#include "s2gn/dataset_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_util.hpp"

namespace s2gn {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() /
           ("s2gn_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir_);
  }
  ~TempDir() { fs::remove_all(dir_); }
  const fs::path& path() const { return dir_; }

 private:
  fs::path dir_;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

// Two graphs: a triangle (label 7) and a single edge (label 3), with edges
// listed in both directions as TU exports usually do.
void write_fixture(const fs::path& dir, const std::string& name) {
  write_file(dir / (name + "_A.txt"), "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n");
  write_file(dir / (name + "_graph_indicator.txt"), "1\n1\n1\n2\n2\n");
  write_file(dir / (name + "_graph_labels.txt"), "7\n3\n");
  write_file(dir / (name + "_node_labels.txt"), "0\n1\n0\n2\n2\n");
}

TEST(LoadTuDataset, ParsesSyntheticFixture) {
  TempDir tmp;
  write_fixture(tmp.path(), "TINY");
  const Dataset ds = load_tu_dataset(tmp.path(), "TINY");
  ASSERT_EQ(ds.graphs.size(), 2u);
  EXPECT_EQ(ds.graphs[0].node_count(), 3);
  EXPECT_EQ(ds.graphs[0].edge_count(), 3);  // duplicate directions collapsed
  EXPECT_EQ(ds.graphs[1].node_count(), 2);
  EXPECT_EQ(ds.graphs[1].edge_count(), 1);
  // Labels {7, 3} remap to {1, 0} preserving sorted order.
  EXPECT_EQ(ds.class_labels, (std::vector<int>{1, 0}));
  EXPECT_EQ(ds.class_count, 2);
  ASSERT_TRUE(ds.graphs[0].node_labels().has_value());
  EXPECT_EQ(*ds.graphs[0].node_labels(), (std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(ds.warnings.empty());
}

TEST(LoadTuDataset, SingleDirectionEdgesAccepted) {
  TempDir tmp;
  write_file(tmp.path() / "ONEWAY_A.txt", "1, 2\n2, 3\n");
  write_file(tmp.path() / "ONEWAY_graph_indicator.txt", "1\n1\n1\n");
  write_file(tmp.path() / "ONEWAY_graph_labels.txt", "1\n");
  const Dataset ds = load_tu_dataset(tmp.path(), "ONEWAY");
  EXPECT_EQ(ds.graphs[0].edge_count(), 2);
}

TEST(LoadTuDataset, MissingFileNamesPath) {
  TempDir tmp;
  try {
    load_tu_dataset(tmp.path(), "NOPE");
    FAIL() << "expected runtime_error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("NOPE"), std::string::npos);
  }
}

TEST(LoadTuDataset, CrossGraphEdgeNamesFileAndLine) {
  TempDir tmp;
  write_fixture(tmp.path(), "BAD");
  write_file(tmp.path() / "BAD_A.txt", "1, 2\n1, 4\n");  // 4 is in graph 2
  try {
    load_tu_dataset(tmp.path(), "BAD");
    FAIL() << "expected runtime_error";
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("BAD_A.txt:2"), std::string::npos) << msg;
  }
}

TEST(LoadTuDataset, MalformedLineReported) {
  TempDir tmp;
  write_fixture(tmp.path(), "UGLY");
  write_file(tmp.path() / "UGLY_graph_labels.txt", "1\nbanana\n");
  try {
    load_tu_dataset(tmp.path(), "UGLY");
    FAIL() << "expected runtime_error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos);
  }
}

TEST(KnownStats, CoversTableDatasets) {
  ASSERT_TRUE(known_dataset_stats("MUTAG").has_value());
  EXPECT_EQ(known_dataset_stats("MUTAG")->n_graphs, 188);
  EXPECT_EQ(known_dataset_stats("ENZYMES")->n_classes, 6);
  EXPECT_FALSE(known_dataset_stats("TINY").has_value());
}

TEST(ExportEdgeLists, TriangleFileContents) {
  TempDir tmp;
  const fs::path dir = tmp.path() / "out";
  export_edge_lists({testing::complete_graph(3)}, {1}, dir, {"st", 1, 9});
  std::ifstream in(dir / "g0.edges");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "0 1\n0 2\n1 2\n");
  std::ifstream idx(dir / "index.json");
  std::string index_text((std::istreambuf_iterator<char>(idx)), std::istreambuf_iterator<char>());
  EXPECT_NE(index_text.find("\"strategy\": \"st\""), std::string::npos);
}

TEST(ExportEdgeLists, EmptyGraphStillIndexed) {
  TempDir tmp;
  const fs::path dir = tmp.path() / "out";
  export_edge_lists({build_graph(4, {})}, {0}, dir, {"original", 0, 0});
  std::ifstream in(dir / "g0.edges");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_TRUE(content.empty());
  const auto [graphs, labels] = import_edge_lists(dir);
  ASSERT_EQ(graphs.size(), 1u);
  EXPECT_EQ(graphs[0].node_count(), 4);
}

TEST(ExportEdgeLists, RoundTripIsIdentity) {
  TempDir tmp;
  std::vector<Graph> graphs;
  std::vector<int> labels;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    graphs.push_back(testing::random_graph(8, 0.3, seed));
    labels.push_back(static_cast<int>(seed % 2));
  }
  const fs::path dir = tmp.path() / "out";
  export_edge_lists(graphs, labels, dir, {"rw", 2, 1});
  const auto [back, back_labels] = import_edge_lists(dir);
  ASSERT_EQ(back.size(), graphs.size());
  EXPECT_EQ(back_labels, labels);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_EQ(testing::edge_set(back[i]), testing::edge_set(graphs[i]));
    EXPECT_EQ(back[i].node_count(), graphs[i].node_count());
  }
}

TEST(FeaturesCsv, HeaderAndShape) {
  TempDir tmp;
  const fs::path path = tmp.path() / "f.csv";
  write_features_csv({{1.5, -2.25}}, {1}, {"a", "b"}, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b,label");
  std::getline(in, line);
  EXPECT_EQ(line, "1.5,-2.25,1");
}

TEST(FeaturesCsv, RoundTripBitExact) {
  TempDir tmp;
  FeatureMatrix m;
  Rng rng = make_rng(17);
  std::uniform_real_distribution<double> unif(-1e6, 1e6);
  std::vector<int> labels;
  for (int i = 0; i < 20; ++i) {
    m.push_back({unif(rng), unif(rng) / 1e9, unif(rng) * 1e-3});
    labels.push_back(i % 3);
  }
  m[0][0] = 0.1;  // classic non-dyadic value
  const fs::path path = tmp.path() / "rt.csv";
  write_features_csv(m, labels, {"x", "y", "z"}, path);
  const FeaturesCsv back = read_features_csv(path);
  EXPECT_EQ(back.columns, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(back.labels, labels);
  ASSERT_EQ(back.matrix.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      EXPECT_EQ(back.matrix[i][j], m[i][j]) << i << "," << j;  // bit-exact round trip
    }
  }
}

TEST(ReportJson, CarriesAllKeys) {
  TempDir tmp;
  EvalReport report;
  report.mean_f1 = 0.5;
  report.std_f1 = 0.1;
  report.per_repetition.assign(100, 0.5);
  report.config_fingerprint = "trees=100";
  const fs::path path = tmp.path() / "r.json";
  write_report_json(report, "TINY", "original", 0.0497, 7, path);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  for (const char* key : {"\"dataset\"", "\"pipeline\"", "\"mean_f1\"", "\"std_f1\"",
                          "\"per_repetition\"", "\"rimp_vs_original\"", "\"wall_time_seconds\"",
                          "\"seed\"", "\"config\""}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  // 100 repetitions serialize as 100 array entries.
  std::size_t commas = 0;
  const std::size_t start = text.find("per_repetition");
  const std::size_t end = text.find(']', start);
  for (std::size_t i = start; i < end; ++i) commas += text[i] == ',' ? 1 : 0;
  EXPECT_EQ(commas, 99u);
}

}  // namespace
}  // namespace s2gn
