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

#include <cstddef>
#include <vector>

namespace dusk {

/// Phase vector of a k-qubit diagonal unitary diag(exp(i*lambda_x)).
///
/// Index x is read as a bitstring with bit i belonging to qubit i
/// (bit 0 = least significant). Entries are radians. The matrix itself
/// is never materialized; the length-2^k real vector is the whole
/// representation.
struct PhaseVector {
  std::vector<double> values;
  int k = 0;

  PhaseVector() = default;

  /// Takes ownership of `v`. Throws std::invalid_argument unless
  /// |v| = 2^k with k >= 1 and every entry is finite.
  explicit PhaseVector(std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t x) const { return values[x]; }
};

/// Walsh-Hadamard coefficients of a phase vector, indexed by parity
/// mask s. alpha[s] is the Rz angle parameter of the phase gadget
/// acting on the parity <s,x> = popcount(s AND x) mod 2.
struct CoeffVector {
  std::vector<double> values;
  int k = 0;

  CoeffVector() = default;

  /// Takes ownership of `v`. Throws std::invalid_argument unless
  /// |v| = 2^k with k >= 1.
  explicit CoeffVector(std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t s) const { return values[s]; }
};

/// alpha_s = 2^-k * sum_x lambda_x * (-1)^popcount(s AND x).
/// In-place butterfly transform, O(k * 2^k).
CoeffVector forward_wht(const PhaseVector& lambda);

/// lambda_x = sum_s alpha_s * (-1)^popcount(s AND x).
/// Exact inverse of forward_wht up to rounding.
PhaseVector inverse_wht(const CoeffVector& alpha);

/// Distance between two diagonal unitaries given by their phase vectors:
///
///   D = sqrt( (1/2^k) * sum_x sin^2((lambda_x - lambda'_x) / 2) )
///
/// D is in [0, 1], zero iff all pairwise differences are multiples of
/// 2*pi, and invariant under a common global phase shift.
/// Throws std::invalid_argument on length mismatch.
double synthesis_error(const PhaseVector& target, const PhaseVector& synthesized);

/// Utility figure of merit: fraction of CNOTs saved divided by the
/// synthesis error. Requires err > 0 (std::domain_error otherwise) and
/// saved_ratio in [0, 1].
double utility_ratio(double saved_ratio, double err);

}  // namespace dusk
