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

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

#include "keymesh/securemsg.hpp"

namespace keymesh::testing {

// Encrypt-then-MAC toy suite: BLAKE2b keystream blocks XORed into the
// plaintext, 16-byte BLAKE2b tag over nonce || ciphertext. Independent of
// the default AEAD so the pluggable interface is exercised by a second
// implementation.
class KeyedStreamCipher final : public CipherSuite {
 public:
  static constexpr std::size_t kNonce = 16;
  static constexpr std::size_t kTag = 16;

  KeyedStreamCipher() {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
  }

  std::string_view name() const override { return "test-keyed-stream"; }
  std::size_t nonce_size() const override { return kNonce; }

  Bytes seal(const KeyMaterial& key, ByteView nonce, ByteView plaintext) const override {
    Bytes out(plaintext.begin(), plaintext.end());
    apply_stream(key, nonce, out);
    const auto tag = mac(key, nonce, out);
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
  }

  std::optional<Bytes> open(const KeyMaterial& key, ByteView nonce,
                            ByteView sealed) const override {
    if (nonce.size() != kNonce || sealed.size() < kTag) return std::nullopt;
    Bytes body(sealed.begin(), sealed.end() - kTag);
    const auto tag = mac(key, nonce, body);
    if (sodium_memcmp(tag.data(), sealed.data() + body.size(), kTag) != 0) {
      return std::nullopt;
    }
    apply_stream(key, nonce, body);
    return body;
  }

 private:
  static void apply_stream(const KeyMaterial& key, ByteView nonce, Bytes& data) {
    std::uint8_t block[64];
    for (std::size_t offset = 0, counter = 0; offset < data.size(); offset += 64, ++counter) {
      std::uint8_t input[kNonce + 9] = {'s'};
      std::copy(nonce.begin(), nonce.end(), input + 1);
      for (int i = 0; i < 8; ++i) input[1 + kNonce + i] = static_cast<std::uint8_t>(counter >> (8 * i));
      crypto_generichash(block, sizeof block, input, sizeof input, key.data(), key.size());
      for (std::size_t i = 0; i < 64 && offset + i < data.size(); ++i) data[offset + i] ^= block[i];
    }
  }

  static std::array<std::uint8_t, kTag> mac(const KeyMaterial& key, ByteView nonce,
                                            const Bytes& body) {
    crypto_generichash_state state;
    crypto_generichash_init(&state, key.data(), key.size(), kTag);
    const std::uint8_t domain = 't';
    crypto_generichash_update(&state, &domain, 1);
    crypto_generichash_update(&state, nonce.data(), nonce.size());
    crypto_generichash_update(&state, body.data(), body.size());
    std::array<std::uint8_t, kTag> tag{};
    crypto_generichash_final(&state, tag.data(), tag.size());
    return tag;
  }
};

}  // namespace keymesh::testing
