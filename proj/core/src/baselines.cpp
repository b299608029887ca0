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

#include "keymesh/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "keymesh/error.hpp"
#include "keymesh/random.hpp"
#include "parallel.hpp"

namespace keymesh {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// Index t in [0, C(n,2)) -> pair (a, b), a < b, row-major over a.
Edge pair_from_index(std::uint64_t t, std::uint32_t n) {
  std::uint32_t a = 0;
  std::uint64_t row = n - 1;
  while (t >= row) {
    t -= row;
    ++a;
    --row;
  }
  return Edge{NodeId{a}, NodeId{static_cast<std::uint32_t>(a + 1 + t)}};
}

}  // namespace

Graph ring_graph(std::uint32_t n) {
  if (n < 3) {
    throw Error(Errc::kInvalidConfig,
                "ring needs at least 3 nodes, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    edges.push_back(make_edge(NodeId{i}, NodeId{(i + 1) % n}));
  }
  return Graph::from_edges(n, edges);
}

void EGConfig::validate() const {
  if (pool_size == 0) throw Error(Errc::kInvalidConfig, "key pool must be non-empty");
  if (ring_size > pool_size) {
    throw Error(Errc::kInvalidConfig, "ring size exceeds pool size");
  }
}

double eg_share_probability(std::uint64_t pool_size, std::uint64_t ring_size) {
  if (ring_size == 0) return 0.0;
  if (ring_size > pool_size || 2 * ring_size > pool_size) return 1.0;
  const cpp_rational disjoint(binomial(pool_size - ring_size, ring_size),
                              binomial(pool_size, ring_size));
  return static_cast<double>(cpp_rational(1) - disjoint);
}

Graph eg_random_key_graph(const EGConfig& cfg, std::uint64_t trial_index) {
  cfg.validate();
  Rng rng(cfg.seed, trial_index);
  // Invert the assignment: for each key, the nodes holding it.
  std::vector<std::vector<std::uint32_t>> holders(cfg.pool_size);
  for (std::uint32_t node = 0; node < cfg.n; ++node) {
    for (std::uint64_t key : rng.sample_distinct(cfg.pool_size, cfg.ring_size)) {
      holders[key].push_back(node);
    }
  }
  std::vector<Edge> edges;
  for (const auto& group : holders) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        edges.push_back(Edge{NodeId{group[i]}, NodeId{group[j]}});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(cfg.n, edges);
}

Graph er_random_graph(std::uint32_t n, std::uint64_t edge_count,
                      std::uint64_t seed) {
  const std::uint64_t slots = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (edge_count > slots) {
    throw Error(Errc::kInfeasible, "G(n,M) needs M <= n(n-1)/2");
  }
  Rng rng(seed, 0);
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::uint64_t t : rng.sample_distinct(slots, edge_count)) {
    edges.push_back(pair_from_index(t, n));
  }
  return Graph::from_edges(n, edges);
}

DisjointSets::DisjointSets(std::uint32_t n)
    : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

bool is_connected(const Graph& graph) {
  const std::uint32_t n = graph.node_count();
  if (n <= 1) return true;
  DisjointSets sets(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (NodeId v : graph.neighbors(NodeId{u})) {
      if (u < v.index && sets.unite(u, v.index) && sets.components() == 1) {
        return true;
      }
    }
  }
  return sets.components() == 1;
}

double connectivity_probability(const GraphGenerator& generator,
                                std::uint64_t trials, Execution exec) {
  if (trials == 0) throw Error(Errc::kInvalidConfig, "trials must be >= 1");
  std::vector<char> connected(trials, 0);
  detail::parallel_for(trials, exec, [&](std::size_t t) {
    connected[t] = is_connected(generator(t)) ? 1 : 0;
  });
  const auto hits = std::count(connected.begin(), connected.end(), 1);
  return static_cast<double>(hits) / static_cast<double>(trials);
}

CaptureReport capture_report(const KeyGraph& graph,
                             std::span<const NodeId> captured) {
  CaptureReport report;
  report.captured.assign(captured.begin(), captured.end());
  for (NodeId node : report.captured) graph.check_node(node);
  std::sort(report.captured.begin(), report.captured.end());
  report.captured.erase(
      std::unique(report.captured.begin(), report.captured.end()),
      report.captured.end());

  for (NodeId node : report.captured) {
    for (const RingEntry& entry : graph.ring(node)) {
      report.revealed_key_ids.push_back(graph.keys()[entry.key_index].id);
    }
  }
  std::sort(report.revealed_key_ids.begin(), report.revealed_key_ids.end());
  report.revealed_key_ids.erase(std::unique(report.revealed_key_ids.begin(),
                                            report.revealed_key_ids.end()),
                                report.revealed_key_ids.end());
  report.revealed_count = report.revealed_key_ids.size();
  report.total_links = graph.edge_count();
  report.fraction_compromised =
      report.total_links == 0
          ? 0.0
          : static_cast<double>(report.revealed_count) /
                static_cast<double>(report.total_links);
  return report;
}

}  // namespace keymesh
