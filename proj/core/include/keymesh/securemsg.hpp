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

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keymesh/keygraph.hpp"
#include "keymesh/router.hpp"

namespace keymesh {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view text);

// Authenticated symmetric encryption used on every hop. open() must return
// nullopt, never garbage, when the key, nonce or ciphertext do not match.
class CipherSuite {
 public:
  virtual ~CipherSuite() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t nonce_size() const = 0;
  virtual Bytes seal(const KeyMaterial& key, ByteView nonce,
                     ByteView plaintext) const = 0;
  virtual std::optional<Bytes> open(const KeyMaterial& key, ByteView nonce,
                                    ByteView sealed) const = 0;
};

// XChaCha20-Poly1305 (IETF construction) from libsodium.
class XChaCha20Poly1305 final : public CipherSuite {
 public:
  XChaCha20Poly1305();

  std::string_view name() const override { return "xchacha20poly1305-ietf"; }
  std::size_t nonce_size() const override;
  Bytes seal(const KeyMaterial& key, ByteView nonce,
             ByteView plaintext) const override;
  std::optional<Bytes> open(const KeyMaterial& key, ByteView nonce,
                            ByteView sealed) const override;
};

// One encrypted transmission over a single link.
struct Frame {
  std::uint64_t delivery = 0;
  std::size_t hop_index = 0;
  NodeId from;
  NodeId to;
  KeyId key_id;
  Bytes nonce;
  Bytes payload;
};

enum class KeyUse { kSeal, kOpen };

struct KeyUseEvent {
  NodeId node;
  KeyId key_id;
  KeyUse use;
};

struct HopFailure {
  std::size_t hop_index = 0;
  NodeId at;
  std::string reason;
};

struct DeliveryReport {
  std::uint64_t delivery = 0;
  PathTrace trace;
  std::vector<KeyId> key_ids;  // key_ids[i] protects hop i
  Bytes delivered_plaintext;
  bool success = false;
  std::optional<HopFailure> failure;
  std::uint64_t messages_transmitted = 0;

  std::size_t hop_count() const noexcept { return trace.hop_count(); }
};

// In-memory network of sensor nodes that exchange frames over the links of a
// KeyGraph. Nodes seal and open only with keys from their own ring.
//
// Deliveries may run concurrently: inbox access is serialised per node and
// nonce allocation is serialised per network.
class SimNetwork {
 public:
  using Observer = std::function<void(const Frame&)>;
  using Interceptor = std::function<void(Frame&)>;
  using KeyUseObserver = std::function<void(const KeyUseEvent&)>;

  explicit SimNetwork(const KeyGraph& graph,
                      std::shared_ptr<const CipherSuite> cipher = nullptr);
  ~SimNetwork();

  SimNetwork(const SimNetwork&) = delete;
  SimNetwork& operator=(const SimNetwork&) = delete;

  const KeyGraph& graph() const noexcept { return graph_; }
  const CipherSuite& cipher() const noexcept { return *cipher_; }

  // Observers see every frame as it goes on the wire (after interception).
  std::size_t add_observer(Observer observer);
  void remove_observer(std::size_t handle);

  // The interceptor may modify frames in flight; used to model tampering.
  void set_interceptor(Interceptor interceptor);
  void add_key_use_observer(KeyUseObserver observer);

  std::uint64_t frames_transmitted() const noexcept { return transmitted_; }
  std::size_t pending_frames(NodeId node) const;

 private:
  friend DeliveryReport send_secure(SimNetwork&, NodeId, NodeId, ByteView);

  struct Inbox;

  Bytes allocate_nonce(KeyId key);
  void transmit(Frame frame);
  std::optional<Frame> receive(NodeId node, std::uint64_t delivery);
  Bytes seal_at(NodeId node, NodeId peer, ByteView nonce, ByteView plaintext,
                KeyId& used);
  std::optional<Bytes> open_at(NodeId node, const Frame& frame);
  void notify(const KeyUseEvent& event);

  const KeyGraph& graph_;
  std::shared_ptr<const CipherSuite> cipher_;
  std::vector<std::unique_ptr<Inbox>> inboxes_;

  std::mutex nonce_mutex_;
  std::map<KeyId, std::uint64_t> nonce_counters_;

  std::mutex hooks_mutex_;
  std::map<std::size_t, Observer> observers_;
  std::size_t next_observer_ = 0;
  Interceptor interceptor_;
  std::vector<KeyUseObserver> key_use_observers_;

  std::atomic<std::uint64_t> transmitted_{0};
  std::atomic<std::uint64_t> next_delivery_{1};
};

// Routes plaintext from src to dest along route(src, dest). Each hop seals
// under that link's pairwise key; the receiver opens it and re-seals toward
// the next hop. An authentication failure stops the delivery and is reported
// in `failure` with the index of the failing hop.
// Throws kSameNode for src == dest and kInvalidConfig for an empty message.
DeliveryReport send_secure(SimNetwork& net, NodeId src, NodeId dest,
                           ByteView plaintext);

struct EavesdropResult {
  bool can_read = false;
  std::vector<std::size_t> compromised_hops;
};

// Delivers a message and lets every adversary node try to open each frame of
// it with every key in its own ring.
EavesdropResult eavesdrop_check(SimNetwork& net, NodeId src, NodeId dest,
                                ByteView plaintext,
                                std::span<const NodeId> adversaries);

}  // namespace keymesh
