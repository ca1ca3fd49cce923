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

#include "dusk/importance.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "dusk/pathsearch.hpp"

namespace dusk {

std::vector<double> normalize_magnitudes(const CoeffVector& alpha, bool* degenerate) {
  const std::size_t n = alpha.size();
  std::vector<double> out(n, 0.0);
  double lo = std::abs(alpha.values[1]);
  double hi = lo;
  for (std::size_t i = 1; i < n; ++i) {
    const double m = std::abs(alpha.values[i]);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  const bool flat = !(hi > lo);
  if (degenerate != nullptr) {
    *degenerate = flat;
  }
  for (std::size_t i = 1; i < n; ++i) {
    out[i] = flat ? 0.5 : (std::abs(alpha.values[i]) - lo) / (hi - lo);
  }
  out[0] = 1.0;
  return out;
}

ImportanceVector phase_importance(const CoeffVector& alpha, int cnot_budget, double gamma) {
  if (cnot_budget < 0) {
    throw std::invalid_argument("phase_importance: cnot_budget must be >= 0");
  }
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("phase_importance: gamma must be > 0");
  }

  ImportanceVector imp;
  imp.k = alpha.k;
  imp.gamma = gamma;
  imp.values = normalize_magnitudes(alpha, &imp.degenerate);

  const std::size_t n = imp.values.size();
  const std::size_t kth = std::min<std::size_t>(static_cast<std::size_t>(cnot_budget) + 2, n);
  std::vector<double> sorted = imp.values;
  std::nth_element(sorted.begin(), sorted.begin() + (kth - 1), sorted.end(), std::greater<>());
  const double threshold = sorted[kth - 1];
  imp.threshold_raw = threshold;

  for (std::size_t i = 1; i < n; ++i) {
    imp.values[i] = 1.0 / (1.0 + std::exp(-gamma * (imp.values[i] - threshold)));
  }
  return imp;
}

bool is_active(const ImportanceVector& imp, NodeId node, const PathState& path, double epsilon) {
  return !path.contains(node) && imp.values[node] > 0.5 - epsilon;
}

}  // namespace dusk
