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

#include "keymesh/error.hpp"

namespace keymesh {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidConfig: return "invalid_config";
    case Errc::kNodeOutOfRange: return "node_out_of_range";
    case Errc::kSameNode: return "same_node";
    case Errc::kNotAnEdge: return "not_an_edge";
    case Errc::kInfeasible: return "infeasible";
  }
  return "unknown";
}

}  // namespace keymesh
