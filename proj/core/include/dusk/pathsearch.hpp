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
#include <functional>
#include <vector>

#include "dusk/hypercube.hpp"
#include "dusk/importance.hpp"
#include "dusk/spectral.hpp"

namespace dusk {

struct SearchStats {
  std::int64_t dead_ends = 0;   // dead-end fallback appends
  std::int64_t extensions = 0;  // successful rotation extensions
  double final_epsilon = 0.0;   // relaxation in effect when the budget filled
};

struct SearchConfig {
  int k = 0;
  int cnot_budget = 0;  // C; the path gets C + 2 node slots
  double gamma = kDefaultGamma;
  double eps_start = 0.01;
  double eps_step = 0.01;
  double eps_max = 0.5;
};

/// A walk on the k-cube. Consecutive nodes differ in exactly one bit;
/// the walk starts at 0^k and may revisit nodes (a revisit costs a
/// budget slot and contributes no new phase).
struct PathState {
  std::vector<NodeId> nodes;
  std::vector<std::uint8_t> visited;  // membership flags, size 2^k
  int distinct = 0;                   // number of distinct nodes
  int budget_nodes = 0;               // C + 2
  int k = 0;
  SearchStats stats;

  static PathState start(int k, int budget_nodes);

  bool contains(NodeId node) const { return visited[node] != 0; }
  NodeId tail() const { return nodes.back(); }
  int size() const { return static_cast<int>(nodes.size()); }
  bool full() const { return size() >= budget_nodes; }

  /// Appends a node, updating the visited set. Adjacency with the
  /// current tail is the caller's responsibility.
  void append(NodeId node);
};

/// Greedy walk: repeatedly append the active neighbor of the tail with
/// the highest importance (ties broken toward the smaller mask) until
/// the budget fills or no neighbor is active. Returns true if at least
/// one node was appended.
bool path_selection(PathState& path, const ImportanceVector& imp, const SearchConfig& config,
                    double epsilon);

/// Rotation extension. Over pivot positions i <= len-3 where path[i]
/// neighbors the tail, consider unvisited neighbors v of path[i+1] and
/// take the candidate with maximal importance (ties: smaller mask, then
/// smaller pivot index). If its importance exceeds 0.5 - epsilon the
/// suffix after the pivot is reversed and v appended:
///
///   p0 .. pi  p(i+1) .. tail   ->   p0 .. pi  tail .. p(i+1)  v
///
/// Returns true on success; the path is unchanged on failure. Paths
/// shorter than 3 nodes have no eligible pivot and fail.
bool path_extension(PathState& path, const ImportanceVector& imp, double epsilon);

/// Dead-end score of a tail neighbor:
///
///   score = [candidate unvisited] * Imp[candidate]
///         + omega * sum over unvisited j != candidate of
///                     (k - hamming(candidate, j)) * Imp[j]
///
/// The proximity sum runs over every node not in the path, so nodes the
/// walk could still want pull the candidate toward them.
double dead_end_score(NodeId candidate, const PathState& path, const ImportanceVector& imp,
                      double omega, int k);

/// Appends the tail neighbor with the highest dead-end score (ties
/// toward the smaller mask). The appended node may already be in the
/// path; a revisit spends one budget slot.
void dead_end_step(PathState& path, const ImportanceVector& imp, double omega);

/// Invoked after every path mutation (selection append, rotation,
/// dead-end append). Used by tests to check invariants mid-search.
using StepCallback = std::function<void(const PathState&)>;

/// Full search driver. Computes alpha = forward_wht(lambda) and the
/// importance weights, then grows the path from 0^k: a greedy pass at
/// epsilon = 0, a sweep over epsilon = eps_start..eps_max (each stall
/// resolved by one dead-end append), and a terminal dead-end loop at
/// eps_max. The result always has exactly cnot_budget + 2 nodes.
///
/// Requires cnot_budget + 2 <= 2 * 2^k and config.k == lambda.k.
PathState path_search(const PhaseVector& lambda, const SearchConfig& config,
                      const StepCallback* on_mutation = nullptr);

/// As above but starting from precomputed coefficients.
PathState path_search(const CoeffVector& alpha, const SearchConfig& config,
                      const StepCallback* on_mutation = nullptr);

}  // namespace dusk
