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

#include <cstdint>
#include <numbers>
#include <vector>

#include "dusk/spectral.hpp"

namespace dusk {

/// splitmix64 finalizer. Fixed constants, identical output on every
/// platform.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// splitmix64: a counter-based generator. Output i is
/// mix64(seed + (i+1) * golden_gamma), so the stream is a pure function
/// of (seed, i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic sub-stream derivation: folds each field into the seed
/// with a mix round. Used to give every (seed_base, k, ratio, trial)
/// combination its own independent stream.
inline std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                                        std::uint64_t c) {
  std::uint64_t s = mix64(base + 0x9E3779B97F4A7C15ULL);
  s = mix64(s ^ (a + 0x9E3779B97F4A7C15ULL));
  s = mix64(s ^ (b + 0x9E3779B97F4A7C15ULL));
  s = mix64(s ^ (c + 0x9E3779B97F4A7C15ULL));
  return s;
}

/// 2^k phases i.i.d. Uniform[0, 2*pi), drawn in index order from
/// SplitMix64(seed).
inline PhaseVector random_phases(int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> v(std::size_t{1} << k);
  for (double& x : v) {
    x = 2.0 * std::numbers::pi * rng.next_unit();
  }
  return PhaseVector(std::move(v));
}

}  // namespace dusk
