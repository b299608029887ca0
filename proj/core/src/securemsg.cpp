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

#include "keymesh/securemsg.hpp"

#include <sodium.h>

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "keymesh/error.hpp"

namespace keymesh {

Bytes to_bytes(std::string_view text) { return Bytes(text.begin(), text.end()); }

XChaCha20Poly1305::XChaCha20Poly1305() {
  if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
}

std::size_t XChaCha20Poly1305::nonce_size() const {
  return crypto_aead_xchacha20poly1305_ietf_NPUBBYTES;
}

Bytes XChaCha20Poly1305::seal(const KeyMaterial& key, ByteView nonce,
                              ByteView plaintext) const {
  if (nonce.size() != nonce_size()) throw std::invalid_argument("bad nonce size");
  Bytes out(plaintext.size() + crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long written = 0;
  crypto_aead_xchacha20poly1305_ietf_encrypt(
      out.data(), &written, plaintext.data(), plaintext.size(), nullptr, 0,
      nullptr, nonce.data(), key.data());
  out.resize(written);
  return out;
}

std::optional<Bytes> XChaCha20Poly1305::open(const KeyMaterial& key,
                                             ByteView nonce,
                                             ByteView sealed) const {
  if (nonce.size() != nonce_size() ||
      sealed.size() < crypto_aead_xchacha20poly1305_ietf_ABYTES) {
    return std::nullopt;
  }
  Bytes out(sealed.size() - crypto_aead_xchacha20poly1305_ietf_ABYTES);
  unsigned long long written = 0;
  if (crypto_aead_xchacha20poly1305_ietf_decrypt(
          out.data(), &written, nullptr, sealed.data(), sealed.size(), nullptr,
          0, nonce.data(), key.data()) != 0) {
    return std::nullopt;
  }
  out.resize(written);
  return out;
}

struct SimNetwork::Inbox {
  mutable std::mutex mutex;
  std::deque<Frame> frames;
};

SimNetwork::SimNetwork(const KeyGraph& graph,
                       std::shared_ptr<const CipherSuite> cipher)
    : graph_(graph),
      cipher_(cipher ? std::move(cipher)
                     : std::make_shared<const XChaCha20Poly1305>()) {
  inboxes_.reserve(graph.node_count());
  for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
    inboxes_.push_back(std::make_unique<Inbox>());
  }
}

SimNetwork::~SimNetwork() = default;

std::size_t SimNetwork::add_observer(Observer observer) {
  std::lock_guard lock(hooks_mutex_);
  observers_.emplace(next_observer_, std::move(observer));
  return next_observer_++;
}

void SimNetwork::remove_observer(std::size_t handle) {
  std::lock_guard lock(hooks_mutex_);
  observers_.erase(handle);
}

void SimNetwork::set_interceptor(Interceptor interceptor) {
  std::lock_guard lock(hooks_mutex_);
  interceptor_ = std::move(interceptor);
}

void SimNetwork::add_key_use_observer(KeyUseObserver observer) {
  std::lock_guard lock(hooks_mutex_);
  key_use_observers_.push_back(std::move(observer));
}

std::size_t SimNetwork::pending_frames(NodeId node) const {
  graph_.check_node(node);
  const Inbox& inbox = *inboxes_[node.index];
  std::lock_guard lock(inbox.mutex);
  return inbox.frames.size();
}

Bytes SimNetwork::allocate_nonce(KeyId key) {
  std::uint64_t counter = 0;
  {
    std::lock_guard lock(nonce_mutex_);
    counter = nonce_counters_[key]++;
  }
  Bytes nonce(cipher_->nonce_size(), 0);
  for (std::size_t i = 0; i < std::min<std::size_t>(8, nonce.size()); ++i) {
    nonce[i] = static_cast<std::uint8_t>(counter >> (8 * i));
  }
  return nonce;
}

void SimNetwork::notify(const KeyUseEvent& event) {
  std::lock_guard lock(hooks_mutex_);
  for (const auto& observer : key_use_observers_) observer(event);
}

void SimNetwork::transmit(Frame frame) {
  {
    std::lock_guard lock(hooks_mutex_);
    if (interceptor_) interceptor_(frame);
    for (const auto& [handle, observer] : observers_) observer(frame);
  }
  ++transmitted_;
  Inbox& inbox = *inboxes_[frame.to.index];
  std::lock_guard lock(inbox.mutex);
  inbox.frames.push_back(std::move(frame));
}

std::optional<Frame> SimNetwork::receive(NodeId node, std::uint64_t delivery) {
  Inbox& inbox = *inboxes_[node.index];
  std::lock_guard lock(inbox.mutex);
  auto it = std::find_if(inbox.frames.begin(), inbox.frames.end(),
                         [&](const Frame& f) { return f.delivery == delivery; });
  if (it == inbox.frames.end()) return std::nullopt;
  Frame frame = std::move(*it);
  inbox.frames.erase(it);
  return frame;
}

Bytes SimNetwork::seal_at(NodeId node, NodeId peer, ByteView nonce,
                          ByteView plaintext, KeyId& used) {
  const PairKey* key = graph_.find_key(node, peer);
  if (key == nullptr) {
    throw std::logic_error("routing chose a peer outside the sender's ring");
  }
  used = key->id;
  notify({node, key->id, KeyUse::kSeal});
  return cipher_->seal(key->material, nonce, plaintext);
}

std::optional<Bytes> SimNetwork::open_at(NodeId node, const Frame& frame) {
  const PairKey* key = graph_.find_key(node, frame.from);
  if (key == nullptr) return std::nullopt;
  notify({node, key->id, KeyUse::kOpen});
  return cipher_->open(key->material, frame.nonce, frame.payload);
}

DeliveryReport send_secure(SimNetwork& net, NodeId src, NodeId dest,
                           ByteView plaintext) {
  const KeyGraph& graph = net.graph();
  graph.check_node(src);
  graph.check_node(dest);
  if (src == dest) {
    throw Error(Errc::kSameNode, "source and destination are the same node");
  }
  if (plaintext.empty()) {
    throw Error(Errc::kInvalidConfig, "message must not be empty");
  }

  DeliveryReport report;
  report.delivery = net.next_delivery_++;
  report.trace = route(src, dest, graph);

  Bytes payload(plaintext.begin(), plaintext.end());
  const auto& hops = report.trace.nodes;
  for (std::size_t i = 0; i + 1 < hops.size(); ++i) {
    const NodeId from = hops[i];
    const NodeId to = hops[i + 1];

    Frame frame;
    frame.delivery = report.delivery;
    frame.hop_index = i;
    frame.from = from;
    frame.to = to;
    frame.key_id = make_key_id(from, to, graph.node_count());
    frame.nonce = net.allocate_nonce(frame.key_id);
    KeyId used;
    frame.payload = net.seal_at(from, to, frame.nonce, payload, used);
    report.key_ids.push_back(used);
    net.transmit(std::move(frame));
    ++report.messages_transmitted;

    std::optional<Frame> received = net.receive(to, report.delivery);
    if (!received) {
      report.failure = HopFailure{i, to, "frame lost in transit"};
      return report;
    }
    std::optional<Bytes> opened = net.open_at(to, *received);
    if (!opened) {
      report.failure = HopFailure{i, to, "authentication failed"};
      return report;
    }
    payload = std::move(*opened);
  }

  report.delivered_plaintext = std::move(payload);
  report.success = true;
  return report;
}

EavesdropResult eavesdrop_check(SimNetwork& net, NodeId src, NodeId dest,
                                ByteView plaintext,
                                std::span<const NodeId> adversaries) {
  for (NodeId a : adversaries) net.graph().check_node(a);

  std::vector<Frame> captured;
  std::mutex captured_mutex;
  const std::size_t tap = net.add_observer([&](const Frame& f) {
    std::lock_guard lock(captured_mutex);
    captured.push_back(f);
  });
  DeliveryReport report;
  try {
    report = send_secure(net, src, dest, plaintext);
  } catch (...) {
    net.remove_observer(tap);
    throw;
  }
  net.remove_observer(tap);

  EavesdropResult result;
  const KeyGraph& graph = net.graph();
  for (const Frame& frame : captured) {
    if (frame.delivery != report.delivery) continue;
    bool readable = false;
    for (NodeId adversary : adversaries) {
      for (const RingEntry& entry : graph.ring(adversary)) {
        const PairKey& key = graph.keys()[entry.key_index];
        if (net.cipher().open(key.material, frame.nonce, frame.payload)) {
          readable = true;
          break;
        }
      }
      if (readable) break;
    }
    if (readable) result.compromised_hops.push_back(frame.hop_index);
  }
  result.can_read = !result.compromised_hops.empty();
  return result;
}

}  // namespace keymesh
