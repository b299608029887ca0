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

#include "keymesh/graph.hpp"

#include <algorithm>
#include <string>

#include "keymesh/error.hpp"

namespace keymesh {

Edge make_edge(NodeId u, NodeId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  Graph g;
  g.n_ = n;
  std::vector<std::uint32_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.a.index >= n || e.b.index >= n) {
      throw Error(Errc::kNodeOutOfRange, "edge endpoint outside [0, n)");
    }
    if (e.a == e.b) {
      throw Error(Errc::kInvalidConfig,
                  "self-loop at node " + std::to_string(e.a.index));
    }
    ++degree[e.a.index];
    ++degree[e.b.index];
  }

  g.row_start_.assign(n + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    g.row_start_[u + 1] = g.row_start_[u] + degree[u];
  }
  g.adjacency_.resize(g.row_start_[n]);
  std::vector<std::uint32_t> fill(g.row_start_.begin(), g.row_start_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[fill[e.a.index]++] = e.b;
    g.adjacency_[fill[e.b.index]++] = e.a;
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    auto first = g.adjacency_.begin() + g.row_start_[u];
    auto last = g.adjacency_.begin() + g.row_start_[u + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw Error(Errc::kInvalidConfig,
                  "duplicate edge at node " + std::to_string(u));
    }
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u.index >= n_ || v.index >= n_) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (NodeId v : neighbors(NodeId{u})) {
      if (u < v.index) out.push_back({NodeId{u}, v});
    }
  }
  return out;
}

}  // namespace keymesh
