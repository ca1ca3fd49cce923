// Copyright 2026 The dusk Authors
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

#include <bit>
#include <cstdint>
#include <vector>

namespace dusk {

/// A node of the k-cube: a k-bit parity mask. Bit i set means qubit i
/// participates in the parity.
using NodeId = std::uint32_t;

inline int hamming_distance(NodeId a, NodeId b) {
  return std::popcount(a ^ b);
}

/// The k nodes at Hamming distance 1 from `node`, in ascending bit
/// order (node XOR 1, node XOR 2, ..., node XOR 2^(k-1)).
inline std::vector<NodeId> neighbors(NodeId node, int k) {
  std::vector<NodeId> result;
  result.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    result.push_back(node ^ (NodeId{1} << i));
  }
  return result;
}

}  // namespace dusk
