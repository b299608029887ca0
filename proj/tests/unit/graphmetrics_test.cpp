// Copyright 2026 The KeyMesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "keymesh/graphmetrics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "keymesh/baselines.hpp"
#include "keymesh/error.hpp"
#include "keymesh/random.hpp"
#include "keymesh/router.hpp"
#include "oracles.hpp"

namespace keymesh {
namespace {

Graph structured(std::uint32_t n) {
  return KeyGraph::build({n, expand_seed(3)}).topology();
}

TEST(ShortestPathLengths, Structured16) {
  const auto d = shortest_path_lengths(structured(16), NodeId{0});
  EXPECT_EQ(std::count(d.begin(), d.end(), 0u), 1);
  EXPECT_EQ(std::count(d.begin(), d.end(), 1u), 7);
  EXPECT_EQ(std::count(d.begin(), d.end(), 2u), 8);
}

TEST(ShortestPathLengths, Ring8) {
  EXPECT_EQ(shortest_path_lengths(ring_graph(8), NodeId{0}),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 3, 2, 1}));
}

TEST(ShortestPathLengths, K4) {
  EXPECT_EQ(shortest_path_lengths(structured(4), NodeId{0}),
            (std::vector<std::uint32_t>{0, 1, 1, 1}));
}

TEST(ShortestPathLengths, UnreachableNodes) {
  const std::vector<Edge> edges = {make_edge(NodeId{0}, NodeId{1})};
  const auto d = shortest_path_lengths(Graph::from_edges(3, edges), NodeId{0});
  EXPECT_EQ(d[2], kUnreachable);
  EXPECT_THROW(shortest_path_lengths(Graph::from_edges(3, edges), NodeId{3}), Error);
}

TEST(ShortestPathLengths, MatchFloydWarshall) {
  for (int n : {4, 7, 8, 16, 30, 64, 100}) {
    const Graph g = structured(static_cast<std::uint32_t>(n));
    const auto fw = oracle::floyd_warshall(oracle::structured_adjacency(n));
    for (int s = 0; s < n; ++s) {
      const auto d = shortest_path_lengths(g, NodeId{static_cast<std::uint32_t>(s)});
      for (int t = 0; t < n; ++t) ASSERT_EQ(static_cast<int>(d[t]), fw[s][t]);
    }
  }
}

TEST(ShortestPathLengths, SymmetricAllPairs) {
  for (std::uint32_t n : {8u, 64u, 256u}) {
    const Graph g = structured(n);
    std::vector<std::vector<std::uint32_t>> all;
    for (std::uint32_t s = 0; s < n; ++s) all.push_back(shortest_path_lengths(g, NodeId{s}));
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) ASSERT_EQ(all[a][b], all[b][a]);
  }
}

TEST(ShortestPathLengths, TriangleInequalitySpotCheck) {
  const std::uint32_t n = 512;
  const Graph g = structured(n);
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const NodeId a{static_cast<std::uint32_t>(rng.below(n))};
    const NodeId b{static_cast<std::uint32_t>(rng.below(n))};
    const NodeId c{static_cast<std::uint32_t>(rng.below(n))};
    const auto da = shortest_path_lengths(g, a);
    const auto dc = shortest_path_lengths(g, c);
    ASSERT_LE(da[b.index], da[c.index] + dc[b.index]);
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(structured(16)), 2u);
  EXPECT_EQ(diameter(structured(8)), 2u);
  EXPECT_EQ(diameter(ring_graph(16)), 8u);
  EXPECT_EQ(diameter(structured(4)), 1u);
}

TEST(Diameter, DisconnectedIsNullopt) {
  const std::vector<Edge> edges = {make_edge(NodeId{0}, NodeId{1})};
  EXPECT_FALSE(diameter(Graph::from_edges(4, edges)).has_value());
  EXPECT_FALSE(average_shortest_path(Graph::from_edges(4, edges)).has_value());
}

TEST(Diameter, MatchesFloydWarshallAndBound) {
  for (int n = 8; n <= 256; n *= 2) {
    const auto fw = oracle::floyd_warshall(oracle::structured_adjacency(n));
    const auto d = diameter(structured(static_cast<std::uint32_t>(n)));
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(static_cast<int>(*d), oracle::matrix_diameter(fw));
    EXPECT_EQ(*d, diameter_bound(static_cast<std::uint32_t>(n)));
  }
}

TEST(Diameter, IndependentOfThreadCount) {
  const Graph g = structured(300);
  const auto one = measure(g, ExactPaths{}, Execution{1});
  const auto four = measure(g, ExactPaths{}, Execution{4});
  EXPECT_EQ(one.diameter, four.diameter);
  EXPECT_EQ(one.avg_shortest_path, four.avg_shortest_path);
}

TEST(AverageShortestPath, Examples) {
  EXPECT_DOUBLE_EQ(*average_shortest_path(structured(16)), 23.0 / 15.0);
  EXPECT_DOUBLE_EQ(*average_shortest_path(ring_graph(8)), 16.0 / 7.0);
  EXPECT_DOUBLE_EQ(*average_shortest_path(structured(4)), 1.0);
}

TEST(AverageShortestPath, MatchesFloydWarshall) {
  for (int n : {5, 9, 16, 33, 64, 100}) {
    const auto fw = oracle::floyd_warshall(oracle::structured_adjacency(n));
    const double expected = static_cast<double>(oracle::matrix_distance_sum(fw)) /
                            (static_cast<double>(n) * (n - 1));
    EXPECT_DOUBLE_EQ(*average_shortest_path(structured(static_cast<std::uint32_t>(n))),
                     expected);
  }
}

TEST(AverageShortestPath, SampledIsDeterministicAndClose) {
  const Graph g = structured(512);
  const double exact = *average_shortest_path(g);
  const auto a = average_shortest_path(g, SampledPaths{20000, 5});
  const auto b = average_shortest_path(g, SampledPaths{20000, 5}, Execution{3});
  ASSERT_TRUE(a && b);
  EXPECT_EQ(*a, *b);
  // Per-pair spread is under one hop, so 20000 samples put the mean well
  // within 0.05.
  EXPECT_NEAR(*a, exact, 0.05);
  EXPECT_NE(*a, *average_shortest_path(g, SampledPaths{20000, 6}));
}

TEST(AverageShortestPath, SampledNeedsPairs) {
  EXPECT_THROW(average_shortest_path(structured(16), SampledPaths{0, 1}), Error);
}

TEST(Clustering, Examples) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(structured(16)), 3.0 / 7.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(structured(4)), 1.0);
  for (std::uint32_t n : {5u, 8u, 64u}) {
    EXPECT_DOUBLE_EQ(clustering_coefficient(ring_graph(n)), 0.0);
  }
  EXPECT_DOUBLE_EQ(clustering_coefficient(ring_graph(3)), 1.0);
}

TEST(Clustering, LowDegreeNodesContributeZero) {
  // Path 0-1-2 plus isolated 3: only node 1 has degree 2 and its pair is open.
  const std::vector<Edge> edges = {make_edge(NodeId{0}, NodeId{1}),
                                   make_edge(NodeId{1}, NodeId{2}),
                                   make_edge(NodeId{0}, NodeId{2})};
  const Graph g = Graph::from_edges(4, edges);
  EXPECT_DOUBLE_EQ(local_clustering(g, NodeId{3}), 0.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(g), 0.75);
}

TEST(Clustering, MatchesAdjacencyMatrix) {
  for (int n : {6, 8, 16, 20, 64, 128}) {
    const double expected = oracle::matrix_clustering(oracle::structured_adjacency(n));
    EXPECT_NEAR(clustering_coefficient(structured(static_cast<std::uint32_t>(n))),
                expected, 1e-12);
  }
}

TEST(Measure, ReportInvariants) {
  for (std::uint32_t n : {4u, 16u, 100u, 256u}) {
    const auto r = measure(structured(n));
    EXPECT_TRUE(r.connected);
    ASSERT_TRUE(r.diameter && r.avg_shortest_path);
    EXPECT_LE(*r.avg_shortest_path, static_cast<double>(*r.diameter));
    EXPECT_GE(r.clustering_coefficient, 0.0);
    EXPECT_LE(r.clustering_coefficient, 1.0);
    EXPECT_EQ(r.pairs_measured, static_cast<std::uint64_t>(n) * (n - 1));
    EXPECT_FALSE(r.sampling_seed.has_value());
  }
  const auto s = measure(structured(64), SampledPaths{100, 9});
  EXPECT_FALSE(s.diameter.has_value());
  EXPECT_EQ(s.pairs_measured, 100u);
  EXPECT_EQ(s.sampling_seed, 9u);
}

TEST(Measure, DegreeStats) {
  const auto r = measure(structured(16));
  EXPECT_EQ(r.degree.min, 7u);
  EXPECT_EQ(r.degree.max, 7u);
  EXPECT_DOUBLE_EQ(r.degree.mean, 7.0);
  EXPECT_EQ(r.edge_count, 56u);
}

TEST(GreedyOptimality, SmallNetworks) {
  const auto r16 = verify_greedy_optimality(KeyGraph::build({16, expand_seed(0)}));
  EXPECT_EQ(r16.pairs_checked, 240u);
  EXPECT_TRUE(r16.mismatches.empty());
  EXPECT_EQ(r16.bfs_diameter, 2u);

  const auto r8 = verify_greedy_optimality(KeyGraph::build({8, expand_seed(0)}));
  EXPECT_EQ(r8.pairs_checked, 56u);
  EXPECT_TRUE(r8.mismatches.empty());

  const auto r4 = verify_greedy_optimality(KeyGraph::build({4, expand_seed(0)}));
  EXPECT_EQ(r4.pairs_checked, 12u);
  EXPECT_TRUE(r4.mismatches.empty());
  EXPECT_EQ(r4.greedy_max_hops, 1u);
}

TEST(GreedyOptimality, SurfacesCounterexampleAtNonPowerOfTwo) {
  // n = 15: greedy sends 0 -> 7 via 4 (closest, distance 3), then 6, then 7.
  // 0 -> 11 -> 7 is shorter: 11 is farther from 7 (distance 4) but exactly
  // one finger away.
  const auto r = verify_greedy_optimality(KeyGraph::build({15, expand_seed(0)}));
  EXPECT_EQ(r.bfs_diameter, 2u);
  EXPECT_EQ(r.greedy_max_hops, 3u);
  EXPECT_EQ(r.mismatches.size(), 30u);
  for (const auto& m : r.mismatches) EXPECT_GT(m.greedy_hops, m.bfs_hops);

  const auto g = KeyGraph::build({15, expand_seed(0)});
  const std::vector<NodeId> greedy = {NodeId{0}, NodeId{4}, NodeId{6}, NodeId{7}};
  EXPECT_EQ(route(NodeId{0}, NodeId{7}, g).nodes, greedy);
  EXPECT_EQ(shortest_path_lengths(g.topology(), NodeId{0})[7], 2u);
}

}  // namespace
}  // namespace keymesh
