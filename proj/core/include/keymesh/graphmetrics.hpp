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

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "keymesh/execution.hpp"
#include "keymesh/graph.hpp"
#include "keymesh/keygraph.hpp"

namespace keymesh {

inline constexpr std::uint32_t kUnreachable =
    std::numeric_limits<std::uint32_t>::max();

// BFS hop counts from source; kUnreachable for nodes in other components.
std::vector<std::uint32_t> shortest_path_lengths(const Graph& graph,
                                                 NodeId source);

// Longest shortest path. nullopt when the graph is disconnected.
std::optional<std::uint32_t> diameter(const Graph& graph, Execution exec = {});

struct ExactPaths {};
struct SampledPaths {
  std::uint64_t pairs = 0;
  std::uint64_t seed = 0;
};
using PathMode = std::variant<ExactPaths, SampledPaths>;

// Mean hop count over ordered pairs a != b: all of them in exact mode, or
// `pairs` uniform draws in sampled mode. nullopt when any measured pair is
// disconnected. Sampled mode with pairs == 0 throws kInvalidConfig.
std::optional<double> average_shortest_path(const Graph& graph,
                                            PathMode mode = ExactPaths{},
                                            Execution exec = {});

// Fraction of the node's neighbour pairs that are adjacent. 0 when deg < 2.
double local_clustering(const Graph& graph, NodeId node);

// Watts-Strogatz clustering: mean of local_clustering over all nodes.
double clustering_coefficient(const Graph& graph);

struct DegreeStats {
  std::uint32_t min = 0;
  std::uint32_t max = 0;
  double mean = 0.0;
};
DegreeStats degree_stats(const Graph& graph);

struct MetricsReport {
  std::uint32_t n = 0;
  bool connected = false;
  std::optional<std::uint32_t> diameter;  // exact mode only
  std::optional<double> avg_shortest_path;
  double clustering_coefficient = 0.0;
  DegreeStats degree;
  std::size_t edge_count = 0;
  std::uint64_t pairs_measured = 0;
  std::optional<std::uint64_t> sampling_seed;
};

// Diameter is computed only in exact mode; sampled mode leaves it empty.
MetricsReport measure(const Graph& graph, PathMode mode = ExactPaths{},
                      Execution exec = {});

struct GreedyMismatch {
  NodeId src;
  NodeId dst;
  std::uint32_t greedy_hops;
  std::uint32_t bfs_hops;
};

struct GreedyOptimalityReport {
  std::uint64_t pairs_checked = 0;
  std::uint32_t greedy_max_hops = 0;
  std::uint32_t bfs_diameter = 0;
  std::vector<GreedyMismatch> mismatches;  // ordered by (src, dst)
};

// Compares greedy route length with BFS distance for every ordered pair.
GreedyOptimalityReport verify_greedy_optimality(const KeyGraph& graph,
                                                Execution exec = {});

}  // namespace keymesh
