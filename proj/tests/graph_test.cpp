#include "s2gn/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "test_util.hpp"

namespace s2gn {
namespace {

using testing::edge_set;
using testing::max_component_size_oracle;
using testing::random_graph;

TEST(BuildGraph, CollapsesDuplicateDirections) {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(edge_set(g), (std::set<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}}));
}

TEST(BuildGraph, SingleIsolatedNode) {
  const Graph g = build_graph(1, {});
  EXPECT_EQ(g.node_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(BuildGraph, DropsSelfLoops) {
  const Graph g = build_graph(4, {{0, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(BuildGraph, RejectsOutOfRangeEndpoint) {
  try {
    build_graph(2, {{0, 5}});
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 5)"), std::string::npos);
  }
}

TEST(IsConnected, PathIsConnected) { EXPECT_TRUE(is_connected(testing::path_graph(3))); }

TEST(IsConnected, DisjointEdgesAreNot) {
  EXPECT_FALSE(is_connected(build_graph(4, {{0, 1}, {2, 3}})));
}

TEST(IsConnected, TrivialGraphsByConvention) {
  EXPECT_TRUE(is_connected(build_graph(1, {})));
  EXPECT_TRUE(is_connected(build_graph(0, {})));
}

TEST(LargestComponent, PicksBiggerComponentAndRelabels) {
  // {0,1} vs the path {2,3,4}: expect the 3-node path on ids {0,1,2}.
  const Graph g = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
  const Graph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.node_count(), 3);
  EXPECT_EQ(edge_set(lcc), (std::set<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}}));
}

TEST(LargestComponent, IdentityOnConnectedInput) {
  const Graph g = testing::complete_graph(4);
  const Graph lcc = largest_connected_component(g);
  EXPECT_EQ(edge_set(lcc), edge_set(g));
}

TEST(LargestComponent, IsolatedNodesGiveSingleton) {
  const Graph lcc = largest_connected_component(build_graph(5, {}));
  EXPECT_EQ(lcc.node_count(), 1);
  EXPECT_EQ(lcc.edge_count(), 0);
}

TEST(LargestComponent, TieGoesToSmallestNodeId) {
  const Graph g = build_graph(4, {{2, 3}, {0, 1}});
  // Both components have 2 nodes; the one containing node 0 must win, and
  // it is indistinguishable after relabeling, so check via a marker size.
  const Graph g2 = build_graph(5, {{3, 4}, {0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(largest_connected_component(g).node_count(), 2);
  EXPECT_EQ(largest_connected_component(g2).edge_count(), 3);
}

TEST(LargestComponent, AgreesWithUnionFindOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 29), 0.08, seed);
    const Graph lcc = largest_connected_component(g);
    EXPECT_TRUE(is_connected(lcc));
    EXPECT_EQ(lcc.node_count(), max_component_size_oracle(g)) << "seed " << seed;
  }
}

TEST(Relabel, IdentityKeepsGraph) {
  const Graph g = testing::path_graph(3);
  std::vector<NodeId> id(3);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(edge_set(relabel(g, id)), edge_set(g));
}

TEST(Relabel, ReversalOfPathIsSamePath) {
  const Graph g = testing::path_graph(3);
  const Graph r = relabel(g, {2, 1, 0});
  EXPECT_EQ(edge_set(r), edge_set(g));
}

TEST(Relabel, RejectsNonBijection) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_THROW(relabel(g, {0, 2}), std::invalid_argument);
  EXPECT_THROW(relabel(g, {0, 0}), std::invalid_argument);
  EXPECT_THROW(relabel(g, {0}), std::invalid_argument);
}

TEST(Relabel, InverseRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(12, 0.3, seed);
    Rng rng = make_rng(seed);
    std::vector<NodeId> mapping(12);
    std::iota(mapping.begin(), mapping.end(), 0);
    std::shuffle(mapping.begin(), mapping.end(), rng);
    std::vector<NodeId> inverse(12);
    for (int i = 0; i < 12; ++i) inverse[static_cast<std::size_t>(mapping[static_cast<std::size_t>(i)])] = i;
    EXPECT_EQ(edge_set(relabel(relabel(g, mapping), inverse)), edge_set(g));
  }
}

TEST(DegreeNeighbors, MatchSpecExamples) {
  const Graph k3 = testing::complete_graph(3);
  EXPECT_EQ(k3.degree(0), 2);
  EXPECT_EQ(std::vector<NodeId>(k3.neighbors(0).begin(), k3.neighbors(0).end()),
            (std::vector<NodeId>{1, 2}));

  const Graph lone = build_graph(1, {});
  EXPECT_EQ(lone.degree(0), 0);
  EXPECT_TRUE(lone.neighbors(0).empty());

  EXPECT_EQ(testing::star_graph(4).degree(0), 4);
  EXPECT_THROW(lone.degree(3), std::invalid_argument);
}

TEST(GraphInvariants, DegreeSumIsTwiceEdges) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(15, 0.25, seed);
    long long sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2LL * g.edge_count());
  }
}

}  // namespace
}  // namespace s2gn
