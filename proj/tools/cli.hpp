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
#include <ostream>
#include <string>
#include <vector>

#include "keymesh/execution.hpp"

namespace keymesh::cli {

// Entry point shared by main() and the tests. `args` excludes the program
// name. Returns 0 on success, 2 on usage errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct SweepOptions {
  std::vector<std::uint32_t> node_counts;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample_pairs;  // exact when empty
  std::uint32_t er_seeds = 30;
  Execution exec;
};

struct SweepRow {
  std::uint32_t n = 0;
  std::optional<std::uint32_t> diameter;
  std::optional<std::uint32_t> bound;
  std::optional<double> avg_path;
  std::optional<double> clustering_structured;
  std::optional<double> clustering_er_mean;
  std::string error;
};

// One row per requested n, in request order. A failing n yields a row with
// `error` set; the remaining rows are still computed.
std::vector<SweepRow> sweep(const SweepOptions& options);

// Shortest round-trip decimal form.
std::string format_double(double value);

}  // namespace keymesh::cli
