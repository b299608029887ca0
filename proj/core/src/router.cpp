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

#include "keymesh/router.hpp"

#include <bit>
#include <string>
#include <tuple>

#include "keymesh/error.hpp"

namespace keymesh {

namespace {

struct Candidate {
  NodeId node;
  std::int64_t offset;
  std::uint32_t distance;
};

// Shared by next_hop and route so the trace records the offset that was
// actually chosen.
Candidate choose(NodeId current, NodeId dest, const KeyGraph& graph) {
  const std::uint32_t n = graph.node_count();
  std::optional<Candidate> best;
  auto rank = [](const Candidate& c) {
    return std::make_tuple(c.distance,
                           c.offset < 0 ? -c.offset : c.offset,
                           c.offset < 0 ? 1 : 0);
  };
  for (std::uint32_t d : graph.offsets()) {
    for (int sign : {+1, -1}) {
      const NodeId hop{sign > 0 ? (current.index + d) % n
                                : (current.index + n - d) % n};
      Candidate c{hop, sign * static_cast<std::int64_t>(d),
                  circular_distance(hop, dest, n)};
      if (hop == dest) return c;
      if (!best || rank(c) < rank(*best)) best = c;
    }
  }
  return *best;
}

}  // namespace

NodeId next_hop(NodeId current, NodeId dest, const KeyGraph& graph) {
  graph.check_node(current);
  graph.check_node(dest);
  if (current == dest) {
    throw Error(Errc::kSameNode, "next_hop called at the destination");
  }
  return choose(current, dest, graph).node;
}

PathTrace route(NodeId src, NodeId dest, const KeyGraph& graph) {
  graph.check_node(src);
  graph.check_node(dest);
  PathTrace trace;
  trace.nodes.push_back(src);
  NodeId current = src;
  std::uint32_t remaining = circular_distance(src, dest, graph.node_count());
  while (current != dest) {
    const Candidate c = choose(current, dest, graph);
    if (c.distance >= remaining) {
      throw std::logic_error("greedy step did not reduce distance");
    }
    trace.nodes.push_back(c.node);
    trace.steps.push_back({c.offset, c.distance});
    current = c.node;
    remaining = c.distance;
  }
  return trace;
}

std::uint32_t route_hop_count(NodeId src, NodeId dest, const KeyGraph& graph) {
  graph.check_node(src);
  graph.check_node(dest);
  std::uint32_t hops = 0;
  for (NodeId current = src; current != dest; ++hops) {
    current = choose(current, dest, graph).node;
  }
  return hops;
}

std::uint32_t diameter_bound(std::uint32_t n) {
  if (n < 8 || !std::has_single_bit(n)) {
    throw Error(Errc::kInvalidConfig,
                "diameter bound needs n = 2^k with k >= 3, got " +
                    std::to_string(n));
  }
  const auto k = static_cast<std::uint32_t>(std::countr_zero(n));
  return (k - 3) / 2 + 2;
}

std::optional<std::uint32_t> try_diameter_bound(std::uint32_t n) {
  if (n < 8 || !std::has_single_bit(n)) return std::nullopt;
  return diameter_bound(n);
}

}  // namespace keymesh
