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

#include "dusk/circuit.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dusk {

Gate Gate::cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("Gate::cnot: control and target must differ");
  }
  Gate g;
  g.kind = Kind::Cnot;
  g.a = control;
  g.b = target;
  return g;
}

Gate Gate::rz(double theta, int wire) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("Gate::rz: theta must be finite");
  }
  Gate g;
  g.kind = Kind::Rz;
  g.a = wire;
  g.theta = theta;
  return g;
}

Gate Gate::x(int wire) {
  Gate g;
  g.kind = Kind::X;
  g.a = wire;
  return g;
}

CoeffVector synthesize_coeffs(const PathState& path, const CoeffVector& alpha_t) {
  if (path.k != alpha_t.k) {
    throw std::invalid_argument("synthesize_coeffs: path and coefficients disagree on k");
  }
  std::vector<double> kept(alpha_t.size(), 0.0);
  for (NodeId s = 0; s < alpha_t.size(); ++s) {
    if (path.contains(s)) {
      kept[s] = alpha_t.values[s];
    }
  }
  return CoeffVector(std::move(kept));
}

Circuit emit_circuit(const PathState& path, const CoeffVector& alpha_t, bool uncompute) {
  if (path.k != alpha_t.k) {
    throw std::invalid_argument("emit_circuit: path and coefficients disagree on k");
  }
  if (path.size() < 2) {
    throw std::invalid_argument("emit_circuit: path must have at least 2 nodes");
  }

  const int k = path.k;
  const int ancilla = k;
  Circuit circuit;
  circuit.wire_count = k + 1;
  circuit.cnot_budget = path.budget_nodes - 2;
  circuit.uncompute = uncompute;

  std::vector<std::uint8_t> rz_done(alpha_t.size(), 0);
  rz_done[path.nodes.front()] = 1;  // start node carries no Rz

  for (int t = 0; t + 1 < path.size(); ++t) {
    const NodeId from = path.nodes[t];
    const NodeId to = path.nodes[t + 1];
    const NodeId flipped = from ^ to;
    if (std::popcount(flipped) != 1) {
      throw std::logic_error("emit_circuit: consecutive path nodes not at Hamming distance 1");
    }
    const int wire = std::countr_zero(flipped);
    circuit.gates.push_back(Gate::cnot(wire, ancilla));
    ++circuit.cnot_emitted;
    if (rz_done[to] == 0) {
      rz_done[to] = 1;
      double theta = -2.0 * alpha_t.values[to];
      if (theta == 0.0) {
        theta = 0.0;  // normalize -0
      }
      circuit.gates.push_back(Gate::rz(theta, ancilla));
      ++circuit.rz_count;
    }
  }

  if (uncompute) {
    NodeId rest = path.nodes.back();
    while (rest != 0) {
      const int wire = std::countr_zero(rest);
      circuit.gates.push_back(Gate::cnot(wire, ancilla));
      ++circuit.cnot_emitted;
      rest &= rest - 1;
    }
  }
  return circuit;
}

std::string to_qasm(const Circuit& circuit) {
  std::string out;
  out.reserve(64 + circuit.gates.size() * 32);
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";

  char line[96];
  std::snprintf(line, sizeof line, "qreg q[%d];\n", circuit.wire_count);
  out += line;

  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        std::snprintf(line, sizeof line, "cx q[%d],q[%d];\n", g.a, g.b);
        break;
      case Gate::Kind::Rz:
        std::snprintf(line, sizeof line, "rz(%.17g) q[%d];\n", g.theta, g.a);
        break;
      case Gate::Kind::X:
        std::snprintf(line, sizeof line, "x q[%d];\n", g.a);
        break;
    }
    out += line;
  }
  return out;
}

}  // namespace dusk
