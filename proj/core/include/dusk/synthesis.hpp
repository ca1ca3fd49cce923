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

#include <optional>

#include "dusk/circuit.hpp"
#include "dusk/pathsearch.hpp"
#include "dusk/spectral.hpp"

namespace dusk {

struct SynthesisOptions {
  SearchConfig config;
  bool emit = false;       // build the gate list
  bool uncompute = true;   // clear the ancilla at the end
};

struct SynthesisResult {
  PathState path;
  CoeffVector alpha_t;
  CoeffVector alpha_c;
  double error = 0.0;  // synthesis_error(lambda_t, lambda_c)
  std::optional<Circuit> circuit;
  int cnot_emitted = 0;  // from the circuit, or the closed-form count
  double runtime_ms = 0.0;
};

/// One full synthesis: path search, kept-coefficient extraction, error
/// evaluation and (optionally) circuit emission. runtime_ms covers the
/// whole pipeline.
SynthesisResult synthesize(const PhaseVector& lambda, const SynthesisOptions& options);

}  // namespace dusk
