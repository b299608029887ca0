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

#include "keymesh/keygraph.hpp"

#include <sodium.h>

#include <algorithm>
#include <bit>
#include <string>
#include <string_view>

#include "keymesh/error.hpp"

namespace keymesh {

namespace {

constexpr std::string_view kPairKeyTag = "keymesh/pair-key/v1";
constexpr std::string_view kSeedTag = "keymesh/master-seed/v1";

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialisation failed");
}

void put_le32(std::uint8_t* out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

void check_range(NodeId id, std::uint32_t n) {
  if (id.index >= n) {
    throw Error(Errc::kNodeOutOfRange,
                "node " + std::to_string(id.index) + " outside [0, " +
                    std::to_string(n) + ")");
  }
}

}  // namespace

Seed expand_seed(std::uint64_t seed) {
  ensure_sodium();
  std::uint8_t input[kSeedTag.size() + 8];
  std::copy(kSeedTag.begin(), kSeedTag.end(), input);
  for (int i = 0; i < 8; ++i) {
    input[kSeedTag.size() + i] = static_cast<std::uint8_t>(seed >> (8 * i));
  }
  Seed out{};
  crypto_generichash(out.data(), out.size(), input, sizeof input, nullptr, 0);
  return out;
}

void GraphConfig::validate() const {
  if (n < 4) {
    throw Error(Errc::kInvalidConfig,
                "node count must be >= 4, got " + std::to_string(n));
  }
}

bool is_power_of_two(std::uint64_t n) noexcept { return std::has_single_bit(n); }

std::vector<std::uint32_t> finger_offsets(std::uint32_t n) {
  GraphConfig{n, {}}.validate();
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n / 2; d <<= 1) out.push_back(d);
  return out;
}

std::vector<NodeId> neighbors(NodeId i, std::uint32_t n) {
  const auto offsets = finger_offsets(n);
  check_range(i, n);
  std::vector<NodeId> out;
  out.reserve(2 * offsets.size());
  for (std::uint32_t d : offsets) {
    out.push_back(NodeId{(i.index + d) % n});
    out.push_back(NodeId{(i.index + n - d) % n});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, i);
  return out;
}

std::uint32_t circular_distance(NodeId a, NodeId b, std::uint32_t n) {
  check_range(a, n);
  check_range(b, n);
  const std::uint32_t forward = (a.index + n - b.index) % n;
  return std::min(forward, (n - forward) % n);
}

KeyId make_key_id(NodeId a, NodeId b, std::uint32_t n) {
  const auto [lo, hi] = std::minmax(a.index, b.index);
  return KeyId{static_cast<std::uint64_t>(lo) * n + hi};
}

PairKey derive_pair_key(const Seed& master_seed, NodeId a, NodeId b,
                        std::uint32_t n) {
  GraphConfig{n, master_seed}.validate();
  check_range(a, n);
  check_range(b, n);
  if (a == b) {
    throw Error(Errc::kSameNode, "a node shares no key with itself");
  }
  const std::uint32_t dist = circular_distance(a, b, n);
  if (!is_power_of_two(dist)) {
    throw Error(Errc::kNotAnEdge, "nodes " + std::to_string(a.index) + " and " +
                                      std::to_string(b.index) +
                                      " share no link");
  }
  ensure_sodium();
  const auto [lo, hi] = std::minmax(a.index, b.index);
  std::uint8_t input[kPairKeyTag.size() + 12];
  std::copy(kPairKeyTag.begin(), kPairKeyTag.end(), input);
  put_le32(input + kPairKeyTag.size(), n);
  put_le32(input + kPairKeyTag.size() + 4, lo);
  put_le32(input + kPairKeyTag.size() + 8, hi);

  PairKey key;
  key.id = make_key_id(a, b, n);
  crypto_generichash(key.material.data(), key.material.size(), input,
                     sizeof input, master_seed.data(), master_seed.size());
  return key;
}

KeyGraph KeyGraph::build(const GraphConfig& config) {
  config.validate();
  const std::uint32_t n = config.n;

  KeyGraph g;
  g.config_ = config;
  g.offsets_ = finger_offsets(n);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * g.offsets_.size());
  for (std::uint32_t d : g.offsets_) {
    for (std::uint32_t u = 0; u < n; ++u) {
      const std::uint32_t v = (u + d) % n;
      // The antipodal offset reaches the same partner from both sides.
      if (2 * d == n && v < u) continue;
      edges.push_back(make_edge(NodeId{u}, NodeId{v}));
    }
  }
  std::sort(edges.begin(), edges.end());
  g.topology_ = Graph::from_edges(n, edges);

  g.keys_.reserve(edges.size());
  for (const Edge& e : edges) {
    g.keys_.push_back(derive_pair_key(config.master_seed, e.a, e.b, n));
  }

  g.ring_start_.assign(n + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    g.ring_start_[u + 1] = g.ring_start_[u] + g.topology_.degree(NodeId{u});
  }
  g.rings_.reserve(g.ring_start_[n]);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (NodeId peer : g.topology_.neighbors(NodeId{u})) {
      const Edge e = make_edge(NodeId{u}, peer);
      const auto it = std::lower_bound(edges.begin(), edges.end(), e);
      g.rings_.push_back(RingEntry{
          peer, circular_distance(NodeId{u}, peer, n),
          static_cast<std::size_t>(it - edges.begin())});
    }
  }
  return g;
}

void KeyGraph::check_node(NodeId id) const { check_range(id, config_.n); }

std::span<const RingEntry> KeyGraph::ring(NodeId holder) const {
  check_node(holder);
  return {rings_.data() + ring_start_[holder.index],
          rings_.data() + ring_start_[holder.index + 1]};
}

const PairKey* KeyGraph::find_key(NodeId holder, NodeId peer) const {
  const auto entries = ring(holder);
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), peer,
      [](const RingEntry& e, NodeId p) { return e.peer < p; });
  if (it == entries.end() || it->peer != peer) return nullptr;
  return &keys_[it->key_index];
}

}  // namespace keymesh
