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

#include "dusk/synthesis.hpp"

#include <bit>
#include <chrono>

namespace dusk {

SynthesisResult synthesize(const PhaseVector& lambda, const SynthesisOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();

  SynthesisResult result;
  result.alpha_t = forward_wht(lambda);
  result.path = path_search(result.alpha_t, options.config);
  result.alpha_c = synthesize_coeffs(result.path, result.alpha_t);
  result.error = synthesis_error(lambda, inverse_wht(result.alpha_c));

  if (options.emit) {
    result.circuit = emit_circuit(result.path, result.alpha_t, options.uncompute);
    result.cnot_emitted = result.circuit->cnot_emitted;
  } else {
    result.cnot_emitted = result.path.size() - 1 +
                          (options.uncompute ? std::popcount(result.path.tail()) : 0);
  }

  const auto t1 = std::chrono::steady_clock::now();
  result.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return result;
}

}  // namespace dusk
