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

#include "dusk/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dusk {

namespace {

// Returns k for n = 2^k with k >= 1, or -1 if n is not such a power.
int log2_exact(std::size_t n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    return -1;
  }
  int k = 0;
  while (n > 1) {
    n >>= 1;
    ++k;
  }
  return k;
}

// Unnormalized Walsh-Hadamard butterfly, H[i][j] = (-1)^popcount(i AND j).
// Self-inverse up to a factor of n.
void wht_in_place(std::vector<double>& v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

}  // namespace

PhaseVector::PhaseVector(std::vector<double> v) : values(std::move(v)) {
  k = log2_exact(values.size());
  if (k < 0) {
    throw std::invalid_argument("PhaseVector length must be 2^k with k >= 1, got " +
                                std::to_string(values.size()));
  }
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("PhaseVector entries must be finite");
    }
  }
}

CoeffVector::CoeffVector(std::vector<double> v) : values(std::move(v)) {
  k = log2_exact(values.size());
  if (k < 0) {
    throw std::invalid_argument("CoeffVector length must be 2^k with k >= 1, got " +
                                std::to_string(values.size()));
  }
}

CoeffVector forward_wht(const PhaseVector& lambda) {
  std::vector<double> v = lambda.values;
  wht_in_place(v);
  const double scale = 1.0 / static_cast<double>(v.size());
  for (double& x : v) {
    x *= scale;
  }
  return CoeffVector(std::move(v));
}

PhaseVector inverse_wht(const CoeffVector& alpha) {
  std::vector<double> v = alpha.values;
  wht_in_place(v);
  return PhaseVector(std::move(v));
}

double synthesis_error(const PhaseVector& target, const PhaseVector& synthesized) {
  if (target.size() != synthesized.size()) {
    throw std::invalid_argument("synthesis_error: phase vectors differ in length");
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < target.size(); ++x) {
    const double s = std::sin((target.values[x] - synthesized.values[x]) / 2.0);
    acc += s * s;
  }
  return std::sqrt(acc / static_cast<double>(target.size()));
}

double utility_ratio(double saved_ratio, double err) {
  if (saved_ratio < 0.0 || saved_ratio > 1.0) {
    throw std::invalid_argument("utility_ratio: saved_ratio must be in [0, 1]");
  }
  if (!(err > 0.0)) {
    throw std::domain_error("utility_ratio: undefined for err = 0");
  }
  return saved_ratio / err;
}

}  // namespace dusk
