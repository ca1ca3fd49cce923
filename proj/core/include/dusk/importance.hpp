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

#include <vector>

#include "dusk/hypercube.hpp"
#include "dusk/spectral.hpp"

namespace dusk {

struct PathState;  // defined in dusk/pathsearch.hpp

/// Node weights for the path search, derived from |alpha|.
///
/// Entry 0 is pinned to exactly 1 (the start node). All other entries
/// are logistic-squashed min-max-normalized coefficient magnitudes and
/// lie strictly inside (0, 1). Ordering by importance agrees with
/// ordering by |alpha| over indices >= 1.
struct ImportanceVector {
  std::vector<double> values;
  /// The K-th largest normalized value (K = min(cnot_budget + 2, 2^k)),
  /// i.e. the pre-logistic activity threshold. Kept for diagnostics.
  double threshold_raw = 0.0;
  /// Logistic steepness used for the squash.
  double gamma = 0.0;
  /// True when all |alpha_i|, i >= 1, were equal and min-max
  /// normalization degenerated to a constant 0.5.
  bool degenerate = false;
  int k = 0;

  double operator[](NodeId node) const { return values[node]; }
};

/// Min-max normalization of |alpha_i| over indices 1..2^k-1 to [0, 1],
/// with entry 0 forced to 1. The degenerate all-equal case maps every
/// index >= 1 to 0.5 (and sets *degenerate when provided).
std::vector<double> normalize_magnitudes(const CoeffVector& alpha, bool* degenerate = nullptr);

constexpr double kDefaultGamma = 50.0;

/// Phase-importance weights: normalize |alpha| to [0, 1], pick the
/// K-th largest normalized value as the threshold (K = min(C + 2, 2^k),
/// entry 0 included at value 1), then squash every index >= 1 through
/// logistic(gamma * (value - threshold)). Entry 0 stays exactly 1, so
/// with distinct normalized values exactly K - 1 entries finish
/// strictly above 0.5 and the K-th sits at exactly 0.5.
///
/// Requires cnot_budget >= 0 and gamma > 0.
ImportanceVector phase_importance(const CoeffVector& alpha, int cnot_budget, double gamma);

/// A node is active when it has not been visited by the path and its
/// importance exceeds 0.5 - epsilon (strictly).
bool is_active(const ImportanceVector& imp, NodeId node, const PathState& path, double epsilon);

}  // namespace dusk
