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
#include <optional>
#include <vector>

#include "keymesh/keygraph.hpp"

namespace keymesh {

struct HopStep {
  std::int64_t offset;        // signed finger offset, + is clockwise
  std::uint32_t remaining;    // circular distance to destination afterwards
};

// A routed path. nodes.front() is the source, nodes.back() the destination,
// and steps[i] describes the move nodes[i] -> nodes[i + 1].
struct PathTrace {
  std::vector<NodeId> nodes;
  std::vector<HopStep> steps;

  std::size_t hop_count() const noexcept { return steps.size(); }
  NodeId source() const { return nodes.front(); }
  NodeId destination() const { return nodes.back(); }
};

// Greedy forwarding decision made with the local view only: the finger
// offsets of `current` and the destination ID. Returns dest when it is a
// direct contact; otherwise the contact closest to dest, ties broken by
// smaller offset magnitude and then by the clockwise direction.
// Throws kSameNode when current == dest.
NodeId next_hop(NodeId current, NodeId dest, const KeyGraph& graph);

PathTrace route(NodeId src, NodeId dest, const KeyGraph& graph);

// Hop count of route(src, dest) without materialising the trace.
std::uint32_t route_hop_count(NodeId src, NodeId dest, const KeyGraph& graph);

// floor(log2(n / 8) / 2) + 2 for n = 2^k, k >= 3. Throws kInvalidConfig
// otherwise.
std::uint32_t diameter_bound(std::uint32_t n);

// diameter_bound when defined, nullopt otherwise.
std::optional<std::uint32_t> try_diameter_bound(std::uint32_t n);

}  // namespace keymesh
