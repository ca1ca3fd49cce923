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

#include "dusk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dusk::oracle {

namespace {

constexpr double kMaxSubsets = 1e7;

inline double parity_sign(NodeId s, NodeId x) {
  return (std::popcount(s & x) & 1) != 0 ? -1.0 : 1.0;
}

double error_from_delta(const std::vector<double>& delta) {
  double acc = 0.0;
  for (double d : delta) {
    const double s = std::sin(d / 2.0);
    acc += s * s;
  }
  return std::sqrt(acc / static_cast<double>(delta.size()));
}

double subset_count(int n, int m) {
  double c = 1.0;
  for (int i = 1; i <= m; ++i) {
    c *= static_cast<double>(n - m + i) / static_cast<double>(i);
    if (c > 4.0 * kMaxSubsets) {
      return c;
    }
  }
  return c;
}

void check_enumeration_bounds(const CoeffVector& alpha, int discard_count) {
  const int n = static_cast<int>(alpha.size()) - 1;
  if (discard_count < 0 || discard_count > n) {
    throw std::invalid_argument("discard_count must be in [0, 2^k - 1]");
  }
  if (subset_count(n, discard_count) > kMaxSubsets) {
    throw std::length_error("discard subset enumeration too large (> 1e7 subsets)");
  }
}

// Lexicographic enumeration of discard subsets over indices 1..2^k-1.
// levels[d] holds the accumulated per-x phase delta after d chosen
// indices; each level is recomputed from its parent, so backtracking is
// exact. `visit` sees the chosen subset and its delta.
template <typename Visit>
void enumerate_subsets(const CoeffVector& alpha, int discard_count, Visit&& visit) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(discard_count) + 1,
                                          std::vector<double>(alpha.size(), 0.0));
  std::vector<NodeId> chosen(static_cast<std::size_t>(discard_count), 0);

  auto recurse = [&](auto&& self, int first, int depth) -> void {
    if (depth == discard_count) {
      visit(chosen, levels[static_cast<std::size_t>(depth)]);
      return;
    }
    const int remaining = discard_count - depth - 1;
    for (int s = first; s + remaining < n; ++s) {
      chosen[static_cast<std::size_t>(depth)] = static_cast<NodeId>(s);
      const auto& parent = levels[static_cast<std::size_t>(depth)];
      auto& next = levels[static_cast<std::size_t>(depth) + 1];
      const double a = alpha.values[static_cast<std::size_t>(s)];
      for (std::size_t x = 0; x < next.size(); ++x) {
        next[x] = parent[x] + a * parity_sign(static_cast<NodeId>(s), static_cast<NodeId>(x));
      }
      self(self, s + 1, depth + 1);
    }
  };
  recurse(recurse, 1, 0);
}

bool lex_less(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

BasisOutcome propagate_basis_state(const Circuit& circuit, std::uint64_t input_label) {
  BasisOutcome out;
  std::uint64_t label = input_label;
  double phase = 0.0;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case Gate::Kind::Cnot:
        if ((label >> g.a) & 1U) {
          label ^= std::uint64_t{1} << g.b;
        }
        break;
      case Gate::Kind::Rz:
        phase += ((label >> g.a) & 1U) != 0 ? g.theta / 2.0 : -g.theta / 2.0;
        break;
      case Gate::Kind::X:
        label ^= std::uint64_t{1} << g.a;
        break;
    }
  }
  out.out_index = label;
  out.phase = phase;
  return out;
}

PhaseVector simulate_diagonal(const Circuit& circuit) {
  if (circuit.wire_count > 20) {
    throw std::invalid_argument("simulate_diagonal: at most 20 wires supported");
  }
  if (circuit.wire_count < 2) {
    throw std::invalid_argument("simulate_diagonal: need at least one data wire plus ancilla");
  }
  const int k = circuit.wire_count - 1;
  std::vector<double> phases(std::size_t{1} << k, 0.0);
  for (std::uint64_t x = 0; x < phases.size(); ++x) {
    const BasisOutcome outcome = propagate_basis_state(circuit, x);
    if (outcome.out_index != x) {
      throw std::runtime_error(
          "simulate_diagonal: circuit is not diagonal with a clean ancilla (basis state " +
          std::to_string(x) + " mapped to " + std::to_string(outcome.out_index) + ")");
    }
    phases[x] = outcome.phase;
  }
  return PhaseVector(std::move(phases));
}

double discard_error(const CoeffVector& alpha, std::span<const NodeId> discard) {
  std::vector<double> delta(alpha.size(), 0.0);
  for (NodeId s : discard) {
    if (s >= alpha.size()) {
      throw std::invalid_argument("discard_error: index out of range");
    }
    for (std::size_t x = 0; x < delta.size(); ++x) {
      delta[x] += alpha.values[s] * parity_sign(s, static_cast<NodeId>(x));
    }
  }
  return error_from_delta(delta);
}

SubsetResult best_discard_subset(const CoeffVector& alpha, int discard_count) {
  check_enumeration_bounds(alpha, discard_count);
  SubsetResult best;
  bool have = false;
  enumerate_subsets(alpha, discard_count,
                    [&](const std::vector<NodeId>& subset, const std::vector<double>& delta) {
                      const double err = error_from_delta(delta);
                      // Lexicographic enumeration: strict improvement
                      // keeps the lexicographically smallest tie.
                      if (!have || err < best.error) {
                        have = true;
                        best.subset = subset;
                        best.error = err;
                      }
                    });
  return best;
}

std::vector<SubsetResult> rank_discard_subsets(const CoeffVector& alpha, int discard_count,
                                               int top_n) {
  check_enumeration_bounds(alpha, discard_count);
  if (top_n < 1) {
    throw std::invalid_argument("rank_discard_subsets: top_n must be >= 1");
  }

  // Max-heap on (error, subset); top() is the worst entry kept.
  const auto worse = [](const SubsetResult& a, const SubsetResult& b) {
    if (a.error != b.error) {
      return a.error < b.error;
    }
    return lex_less(a.subset, b.subset);
  };
  std::priority_queue<SubsetResult, std::vector<SubsetResult>, decltype(worse)> heap(worse);

  enumerate_subsets(alpha, discard_count,
                    [&](const std::vector<NodeId>& subset, const std::vector<double>& delta) {
                      const double err = error_from_delta(delta);
                      if (heap.size() < static_cast<std::size_t>(top_n)) {
                        heap.push(SubsetResult{subset, err});
                        return;
                      }
                      const SubsetResult& cur = heap.top();
                      if (err < cur.error || (err == cur.error && lex_less(subset, cur.subset))) {
                        heap.pop();
                        heap.push(SubsetResult{subset, err});
                      }
                    });

  std::vector<SubsetResult> out;
  out.reserve(heap.size());
  while (!heap.empty()) {
    out.push_back(heap.top());
    heap.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Circuit read_qasm(const std::string& text) {
  Circuit circuit;
  bool saw_header = false;
  bool saw_qreg = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    if (line == "OPENQASM 2.0;") {
      saw_header = true;
      continue;
    }
    if (line == "include \"qelib1.inc\";") {
      continue;
    }
    int a = 0;
    int b = 0;
    double theta = 0.0;
    if (std::sscanf(line.c_str(), "qreg q[%d];", &a) == 1) {
      circuit.wire_count = a;
      saw_qreg = true;
      continue;
    }
    if (std::sscanf(line.c_str(), "cx q[%d],q[%d];", &a, &b) == 2) {
      circuit.gates.push_back(Gate::cnot(a, b));
      ++circuit.cnot_emitted;
      continue;
    }
    if (std::sscanf(line.c_str(), "rz(%lf) q[%d];", &theta, &a) == 2) {
      circuit.gates.push_back(Gate::rz(theta, a));
      ++circuit.rz_count;
      continue;
    }
    if (std::sscanf(line.c_str(), "x q[%d];", &a) == 1) {
      circuit.gates.push_back(Gate::x(a));
      continue;
    }
    throw std::invalid_argument("read_qasm: unrecognized line: " + line);
  }
  if (!saw_header || !saw_qreg) {
    throw std::invalid_argument("read_qasm: missing OPENQASM header or qreg declaration");
  }
  return circuit;
}

}  // namespace dusk::oracle
