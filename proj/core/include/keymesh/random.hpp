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
#include <random>
#include <vector>

namespace keymesh {

// Derives an independent stream seed from (seed, trial). Every randomized
// generator in the library is a pure function of this pair.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

// mt19937_64 with bounded draws that do not depend on the standard library's
// distribution implementations, so outputs are byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t trial)
      : engine_(stream_seed(seed, trial)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  // `count` distinct values uniform over [0, range), Floyd's algorithm.
  // Returned ascending.
  std::vector<std::uint64_t> sample_distinct(std::uint64_t range,
                                             std::uint64_t count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace keymesh
