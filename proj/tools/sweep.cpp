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

#include <exception>
#include <string>

#include "cli.hpp"
#include "keymesh/baselines.hpp"
#include "keymesh/error.hpp"
#include "keymesh/graphmetrics.hpp"
#include "keymesh/keygraph.hpp"
#include "keymesh/random.hpp"
#include "keymesh/router.hpp"

namespace keymesh::cli {

namespace {

SweepRow sweep_one(std::uint32_t n, const SweepOptions& options) {
  SweepRow row;
  row.n = n;
  const KeyGraph graph =
      KeyGraph::build(GraphConfig{n, expand_seed(options.seed)});
  const Graph& topology = graph.topology();

  PathMode mode = ExactPaths{};
  if (options.sample_pairs) {
    mode = SampledPaths{*options.sample_pairs, stream_seed(options.seed, n)};
  }
  const MetricsReport report = measure(topology, mode, options.exec);
  row.diameter = report.diameter;
  row.bound = try_diameter_bound(n);
  row.avg_path = report.avg_shortest_path;
  row.clustering_structured = report.clustering_coefficient;

  if (options.er_seeds > 0) {
    double sum = 0.0;
    for (std::uint32_t i = 0; i < options.er_seeds; ++i) {
      const Graph er = er_random_graph(n, topology.edge_count(),
                                       stream_seed(options.seed, i));
      sum += clustering_coefficient(er);
    }
    row.clustering_er_mean = sum / options.er_seeds;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(options.node_counts.size());
  for (std::uint32_t n : options.node_counts) {
    try {
      rows.push_back(sweep_one(n, options));
    } catch (const Error& e) {
      SweepRow failed;
      failed.n = n;
      failed.error = std::string(to_string(e.code())) + ": " + e.what();
      rows.push_back(std::move(failed));
    }
  }
  return rows;
}

}  // namespace keymesh::cli
