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
#include <functional>
#include <span>
#include <vector>

#include "keymesh/execution.hpp"
#include "keymesh/graph.hpp"
#include "keymesh/keygraph.hpp"

namespace keymesh {

// Cycle 0-1-...-(n-1)-0, the two-key minimum for connectivity. n >= 3.
Graph ring_graph(std::uint32_t n);

// Eschenauer-Gligor random key predistribution parameters.
struct EGConfig {
  std::uint32_t n = 0;
  std::uint64_t pool_size = 0;
  std::uint64_t ring_size = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  // Throws kInvalidConfig unless ring_size <= pool_size and pool_size > 0.
  void validate() const;
};

// Probability that two independent uniform k-subsets of a P-key pool
// intersect: 1 - C(P-k, k) / C(P, k), exact rational arithmetic. Returns 1
// when 2k > P.
double eg_share_probability(std::uint64_t pool_size, std::uint64_t ring_size);

// One EG trial: every node draws ring_size keys without replacement; nodes
// that share a key are linked. Deterministic in (cfg.seed, trial_index).
Graph eg_random_key_graph(const EGConfig& cfg, std::uint64_t trial_index);

// G(n, M): uniform simple graph with exactly edge_count edges.
// Throws kInfeasible when edge_count > n(n-1)/2.
Graph er_random_graph(std::uint32_t n, std::uint64_t edge_count,
                      std::uint64_t seed);

// Union-find over a node range.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n);

  std::uint32_t find(std::uint32_t x);
  bool unite(std::uint32_t a, std::uint32_t b);
  std::uint32_t components() const noexcept { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::uint32_t components_;
};

bool is_connected(const Graph& graph);

using GraphGenerator = std::function<Graph(std::uint64_t trial_index)>;

// Fraction of `trials` generated graphs that are connected. The generator is
// called once per trial index in [0, trials), possibly concurrently.
double connectivity_probability(const GraphGenerator& generator,
                                std::uint64_t trials, Execution exec = {});

struct CaptureReport {
  std::vector<NodeId> captured;        // ascending, deduplicated
  std::vector<KeyId> revealed_key_ids; // ascending
  std::size_t revealed_count = 0;
  std::size_t total_links = 0;
  double fraction_compromised = 0.0;
};

// Keys an adversary learns by reading the rings of the captured nodes.
CaptureReport capture_report(const KeyGraph& graph,
                             std::span<const NodeId> captured);

}  // namespace keymesh
