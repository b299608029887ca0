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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "keymesh/graph.hpp"

namespace keymesh {

using Seed = std::array<std::uint8_t, 32>;
using KeyMaterial = std::array<std::uint8_t, 32>;

// Expands a 64-bit experiment seed into a 256-bit master seed.
Seed expand_seed(std::uint64_t seed);

// Stable identifier of the key shared over the unordered pair {lo, hi}.
// Encoded as lo * n + hi, so it is unique within a graph of n nodes.
struct KeyId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(KeyId, KeyId) = default;
};

struct PairKey {
  KeyId id;
  KeyMaterial material{};

  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct GraphConfig {
  std::uint32_t n = 0;
  Seed master_seed{};

  // Throws Errc::kInvalidConfig when n < 4.
  void validate() const;
};

// Powers of two up to floor(n/2), ascending. For n = 2^k this is
// {1, 2, 4, ..., n/2}, i.e. log2(n) offsets.
std::vector<std::uint32_t> finger_offsets(std::uint32_t n);

// {i +- d mod n : d in finger_offsets(n)} without i, ascending.
std::vector<NodeId> neighbors(NodeId i, std::uint32_t n);

// Symmetric ring distance min((a - b) mod n, (b - a) mod n). This is the
// routing "closeness" metric.
std::uint32_t circular_distance(NodeId a, NodeId b, std::uint32_t n);

bool is_power_of_two(std::uint64_t n) noexcept;

KeyId make_key_id(NodeId a, NodeId b, std::uint32_t n);

// Keyed BLAKE2b over (domain tag, n, min, max). Symmetric in (a, b).
// Throws kSameNode for a == b and kNotAnEdge when a and b share no link.
PairKey derive_pair_key(const Seed& master_seed, NodeId a, NodeId b,
                        std::uint32_t n);

// One slot of a node's key ring.
struct RingEntry {
  NodeId peer;
  std::uint32_t offset;     // unsigned finger offset that links the pair
  std::size_t key_index;    // into KeyGraph::keys()
};

// The structured key-predistribution topology with its pairwise keys.
// Immutable once built; safe to share between threads.
class KeyGraph {
 public:
  static KeyGraph build(const GraphConfig& config);

  std::uint32_t node_count() const noexcept { return config_.n; }
  const GraphConfig& config() const noexcept { return config_; }
  std::span<const std::uint32_t> offsets() const noexcept { return offsets_; }

  const Graph& topology() const noexcept { return topology_; }
  std::size_t edge_count() const noexcept { return topology_.edge_count(); }

  // The keys stored at `holder`, ordered by peer ID.
  std::span<const RingEntry> ring(NodeId holder) const;

  // Key held by `holder` for `peer`; nullptr when they share no link.
  const PairKey* find_key(NodeId holder, NodeId peer) const;

  // All pairwise keys, one per edge, in edge order.
  std::span<const PairKey> keys() const noexcept { return keys_; }

  void check_node(NodeId id) const;

 private:
  GraphConfig config_;
  std::vector<std::uint32_t> offsets_;
  Graph topology_;
  std::vector<std::uint32_t> ring_start_;
  std::vector<RingEntry> rings_;
  std::vector<PairKey> keys_;
};

}  // namespace keymesh
