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

#include <algorithm>
#include <cmath>
#include <map>

#include "keymesh/error.hpp"
#include "keymesh/random.hpp"
#include "keymesh/router.hpp"
#include "parallel.hpp"

namespace keymesh {

namespace {

struct SourceSummary {
  std::uint32_t eccentricity = 0;
  std::uint64_t distance_sum = 0;
  bool reaches_all = true;
};

SourceSummary summarize(const std::vector<std::uint32_t>& dist) {
  SourceSummary s;
  for (std::uint32_t d : dist) {
    if (d == kUnreachable) {
      s.reaches_all = false;
      continue;
    }
    s.eccentricity = std::max(s.eccentricity, d);
    s.distance_sum += d;
  }
  return s;
}

struct AllPairs {
  bool connected = true;
  std::uint32_t diameter = 0;
  std::uint64_t distance_sum = 0;
};

AllPairs all_pairs(const Graph& graph, Execution exec) {
  const std::uint32_t n = graph.node_count();
  std::vector<SourceSummary> per_source(n);
  detail::parallel_for(n, exec, [&](std::size_t s) {
    per_source[s] = summarize(
        shortest_path_lengths(graph, NodeId{static_cast<std::uint32_t>(s)}));
  });
  AllPairs out;
  for (const SourceSummary& s : per_source) {
    out.connected = out.connected && s.reaches_all;
    out.diameter = std::max(out.diameter, s.eccentricity);
    out.distance_sum += s.distance_sum;
  }
  return out;
}

std::optional<double> sampled_average(const Graph& graph, SampledPaths mode,
                                      Execution exec) {
  if (mode.pairs == 0) {
    throw Error(Errc::kInvalidConfig, "sampled mode needs at least one pair");
  }
  const std::uint32_t n = graph.node_count();
  if (n < 2) {
    throw Error(Errc::kInvalidConfig, "need two nodes to sample a pair");
  }
  Rng rng(mode.seed, 0);
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_source;
  for (std::uint64_t i = 0; i < mode.pairs; ++i) {
    const auto a = static_cast<std::uint32_t>(rng.below(n));
    auto b = static_cast<std::uint32_t>(rng.below(n - 1));
    if (b >= a) ++b;
    by_source[a].push_back(b);
  }
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> work(
      by_source.begin(), by_source.end());
  std::vector<std::uint64_t> sums(work.size(), 0);
  std::vector<char> broken(work.size(), 0);
  detail::parallel_for(work.size(), exec, [&](std::size_t i) {
    const auto dist = shortest_path_lengths(graph, NodeId{work[i].first});
    for (std::uint32_t target : work[i].second) {
      if (dist[target] == kUnreachable) {
        broken[i] = 1;
        return;
      }
      sums[i] += dist[target];
    }
  });
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (broken[i]) return std::nullopt;
    total += sums[i];
  }
  return static_cast<double>(total) / static_cast<double>(mode.pairs);
}

}  // namespace

std::vector<std::uint32_t> shortest_path_lengths(const Graph& graph,
                                                 NodeId source) {
  const std::uint32_t n = graph.node_count();
  if (source.index >= n) {
    throw Error(Errc::kNodeOutOfRange, "BFS source outside the graph");
  }
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<NodeId> frontier;
  frontier.reserve(n);
  dist[source.index] = 0;
  frontier.push_back(source);
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    for (NodeId v : graph.neighbors(u)) {
      if (dist[v.index] == kUnreachable) {
        dist[v.index] = dist[u.index] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::uint32_t> diameter(const Graph& graph, Execution exec) {
  const AllPairs ap = all_pairs(graph, exec);
  if (!ap.connected) return std::nullopt;
  return ap.diameter;
}

std::optional<double> average_shortest_path(const Graph& graph, PathMode mode,
                                            Execution exec) {
  if (const auto* sampled = std::get_if<SampledPaths>(&mode)) {
    return sampled_average(graph, *sampled, exec);
  }
  const std::uint64_t n = graph.node_count();
  if (n < 2) return std::nullopt;
  const AllPairs ap = all_pairs(graph, exec);
  if (!ap.connected) return std::nullopt;
  return static_cast<double>(ap.distance_sum) / static_cast<double>(n * (n - 1));
}

double local_clustering(const Graph& graph, NodeId node) {
  const auto row = graph.neighbors(node);
  const std::size_t k = row.size();
  if (k < 2) return 0.0;
  // Each link among the neighbours is seen from both of its endpoints.
  std::uint64_t twice_links = 0;
  for (NodeId v : row) {
    const auto other = graph.neighbors(v);
    auto a = row.begin();
    auto b = other.begin();
    while (a != row.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++twice_links;
        ++a;
        ++b;
      }
    }
  }
  return static_cast<double>(twice_links) / static_cast<double>(k * (k - 1));
}

double clustering_coefficient(const Graph& graph) {
  const std::uint32_t n = graph.node_count();
  if (n == 0) return 0.0;
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint32_t u = 0; u < n; ++u) {
    const double x = local_clustering(graph, NodeId{u});
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return (sum + carry) / n;
}

DegreeStats degree_stats(const Graph& graph) {
  const std::uint32_t n = graph.node_count();
  DegreeStats s;
  if (n == 0) return s;
  s.min = graph.degree(NodeId{0});
  for (std::uint32_t u = 0; u < n; ++u) {
    const std::uint32_t d = graph.degree(NodeId{u});
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
  }
  s.mean = 2.0 * static_cast<double>(graph.edge_count()) / n;
  return s;
}

MetricsReport measure(const Graph& graph, PathMode mode, Execution exec) {
  MetricsReport r;
  r.n = graph.node_count();
  r.clustering_coefficient = clustering_coefficient(graph);
  r.degree = degree_stats(graph);
  r.edge_count = graph.edge_count();
  if (const auto* sampled = std::get_if<SampledPaths>(&mode)) {
    r.avg_shortest_path = sampled_average(graph, *sampled, exec);
    r.connected = r.avg_shortest_path.has_value();
    r.pairs_measured = sampled->pairs;
    r.sampling_seed = sampled->seed;
    return r;
  }
  const AllPairs ap = all_pairs(graph, exec);
  const std::uint64_t n = r.n;
  r.connected = ap.connected;
  r.pairs_measured = n * (n > 0 ? n - 1 : 0);
  if (ap.connected) {
    r.diameter = ap.diameter;
    if (n >= 2) {
      r.avg_shortest_path = static_cast<double>(ap.distance_sum) /
                            static_cast<double>(r.pairs_measured);
    }
  }
  return r;
}

GreedyOptimalityReport verify_greedy_optimality(const KeyGraph& graph,
                                                Execution exec) {
  const std::uint32_t n = graph.node_count();
  struct PerSource {
    std::uint32_t greedy_max = 0;
    std::uint32_t bfs_max = 0;
    std::vector<GreedyMismatch> mismatches;
  };
  std::vector<PerSource> per_source(n);
  detail::parallel_for(n, exec, [&](std::size_t s) {
    const NodeId src{static_cast<std::uint32_t>(s)};
    const auto dist = shortest_path_lengths(graph.topology(), src);
    PerSource& out = per_source[s];
    for (std::uint32_t t = 0; t < n; ++t) {
      if (t == src.index) continue;
      const NodeId dst{t};
      const std::uint32_t hops = route_hop_count(src, dst, graph);
      out.greedy_max = std::max(out.greedy_max, hops);
      out.bfs_max = std::max(out.bfs_max, dist[t]);
      if (hops != dist[t]) out.mismatches.push_back({src, dst, hops, dist[t]});
    }
  });
  GreedyOptimalityReport report;
  report.pairs_checked = static_cast<std::uint64_t>(n) * (n - 1);
  for (PerSource& p : per_source) {
    report.greedy_max_hops = std::max(report.greedy_max_hops, p.greedy_max);
    report.bfs_diameter = std::max(report.bfs_diameter, p.bfs_max);
    report.mismatches.insert(report.mismatches.end(), p.mismatches.begin(),
                             p.mismatches.end());
  }
  return report;
}

}  // namespace keymesh
