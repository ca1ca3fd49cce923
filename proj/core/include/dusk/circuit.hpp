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

#include <string>
#include <vector>

#include "dusk/pathsearch.hpp"
#include "dusk/spectral.hpp"

namespace dusk {

/// One gate over wires 0..k. Wire k is the accumulator ancilla.
/// Rz(theta) acts as diag(e^{-i theta/2}, e^{+i theta/2}) on its wire.
struct Gate {
  enum class Kind { Cnot, Rz, X };

  Kind kind = Kind::Cnot;
  int a = -1;          // control wire (Cnot) or target wire (Rz, X)
  int b = -1;          // target wire (Cnot only)
  double theta = 0.0;  // Rz angle, radians

  static Gate cnot(int control, int target);
  static Gate rz(double theta, int wire);
  static Gate x(int wire);

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::vector<Gate> gates;
  int wire_count = 0;
  int cnot_budget = 0;   // the C the search ran with
  int cnot_emitted = 0;  // CNOT gates actually in `gates`
  int rz_count = 0;      // distinct non-start path nodes
  bool uncompute = false;
};

/// Coefficients kept by a path: alpha_c[s] = alpha_t[s] for every s the
/// path visited (including s = 0, the global-phase term carried by the
/// start node), zero elsewhere.
CoeffVector synthesize_coeffs(const PathState& path, const CoeffVector& alpha_t);

/// Accumulator-ancilla realization of the path over k+1 wires. The
/// ancilla (wire k) holds the running parity mask, starting at 0 to
/// match path[0] = 0^k. Each edge flipping bit j costs one
/// CNOT(j -> ancilla); the first arrival at a node s adds
/// Rz(-2 * alpha_t[s]) on the ancilla, so the gadget contributes
/// alpha_t[s] * (-1)^popcount(s AND x) to the phase of |x>. Revisited
/// nodes get the CNOT but no Rz. With `uncompute`, trailing CNOTs clear
/// the ancilla back to 0. The global-phase coefficient alpha_t[0] is
/// never emitted.
Circuit emit_circuit(const PathState& path, const CoeffVector& alpha_t, bool uncompute);

/// OpenQASM 2.0 serialization. One line per gate, Rz angles printed
/// with 17 significant digits; output is byte-for-byte deterministic.
std::string to_qasm(const Circuit& circuit);

}  // namespace dusk
