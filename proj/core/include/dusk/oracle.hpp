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
#include <span>
#include <string>
#include <vector>

#include "dusk/circuit.hpp"
#include "dusk/hypercube.hpp"
#include "dusk/spectral.hpp"

// Verification machinery, independent of the synthesis path: a
// basis-state phase-tracking simulator, exhaustive discard-subset
// search, and a minimal reader for the emitted QASM subset. Used by
// tests and the golden tables; never by synthesis itself.
namespace dusk::oracle {

/// Where one basis state lands after a CNOT/Rz/X circuit, and the phase
/// it picked up. Such circuits permute basis states, so every input
/// maps to exactly one output label.
struct BasisOutcome {
  std::uint64_t out_index = 0;
  double phase = 0.0;  // radians, accumulated (not reduced mod 2*pi)
};

/// Tracks a single basis state through the circuit. Labels are bit
/// strings over all wire_count wires.
BasisOutcome propagate_basis_state(const Circuit& circuit, std::uint64_t input_label);

/// Simulates every input |x> (x over the first wire_count-1 wires) with
/// the last wire, the ancilla, starting at 0. Returns the accumulated
/// phase per x. Throws std::runtime_error if any basis state fails to
/// map back to itself (non-diagonal circuit or dirty ancilla) and
/// std::invalid_argument when wire_count exceeds 20.
PhaseVector simulate_diagonal(const Circuit& circuit);

/// Exact error left by zeroing the coefficients in `discard`:
/// sqrt( (1/2^k) * sum_x sin^2( sum_{s in discard} alpha_s * chi_s(x) / 2 ) ).
/// Evaluated directly from alpha, bypassing the transform machinery.
double discard_error(const CoeffVector& alpha, std::span<const NodeId> discard);

struct SubsetResult {
  std::vector<NodeId> subset;  // ascending indices
  double error = 0.0;
};

/// Exhaustively enumerates every discard subset of the given size over
/// indices 1..2^k-1 and returns the one with minimal exact error (ties
/// to the lexicographically smallest subset). Refuses instances with
/// more than ~10^7 subsets.
SubsetResult best_discard_subset(const CoeffVector& alpha, int discard_count);

/// The top_n lowest-error discard subsets, ascending by error (ties
/// lexicographic). top_n = 1 reduces to best_discard_subset.
std::vector<SubsetResult> rank_discard_subsets(const CoeffVector& alpha, int discard_count,
                                               int top_n);

/// Minimal reader for the QASM subset produced by to_qasm (OPENQASM
/// 2.0 header, qreg, cx/rz/x lines). Round-trips the gate list exactly.
/// Throws std::invalid_argument on anything it does not recognize.
Circuit read_qasm(const std::string& text);

}  // namespace dusk::oracle
