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

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace keymesh {

// Position of a node on the ID ring, 0-based. Display code may add one to
// match the 1..N labelling used for sensor IDs.
struct NodeId {
  std::uint32_t index = 0;

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

struct Edge {
  NodeId a;  // a < b
  NodeId b;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in compressed adjacency form. Every
// topology in the library (structured key graph, ring, random baselines)
// reduces to one of these for measurement.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges and self-loops are rejected with Errc::kInvalidConfig.
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges);

  std::uint32_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + row_start_[u.index],
            adjacency_.data() + row_start_[u.index + 1]};
  }
  std::uint32_t degree(NodeId u) const {
    return row_start_[u.index + 1] - row_start_[u.index];
  }
  bool has_edge(NodeId u, NodeId v) const;

  std::vector<Edge> edges() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> row_start_{0};
  std::vector<NodeId> adjacency_;
};

Edge make_edge(NodeId u, NodeId v);

}  // namespace keymesh

template <>
struct std::hash<keymesh::NodeId> {
  std::size_t operator()(keymesh::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.index);
  }
};
