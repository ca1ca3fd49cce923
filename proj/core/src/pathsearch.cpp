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

#include "dusk/pathsearch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dusk {

PathState PathState::start(int k, int budget_nodes) {
  if (k < 1) {
    throw std::invalid_argument("PathState: k must be >= 1");
  }
  PathState path;
  path.k = k;
  path.budget_nodes = budget_nodes;
  path.visited.assign(std::size_t{1} << k, 0);
  path.nodes.reserve(static_cast<std::size_t>(std::max(budget_nodes, 1)));
  path.nodes.push_back(0);
  path.visited[0] = 1;
  path.distinct = 1;
  return path;
}

void PathState::append(NodeId node) {
  nodes.push_back(node);
  if (visited[node] == 0) {
    visited[node] = 1;
    ++distinct;
  }
}

bool path_selection(PathState& path, const ImportanceVector& imp, const SearchConfig& config,
                    double epsilon) {
  bool appended_any = false;
  while (!path.full()) {
    const NodeId tail = path.tail();
    bool found = false;
    NodeId best = 0;
    double best_imp = 0.0;
    for (int bit = 0; bit < config.k; ++bit) {
      const NodeId cand = tail ^ (NodeId{1} << bit);
      if (path.contains(cand) || !(imp.values[cand] > 0.5 - epsilon)) {
        continue;
      }
      const double w = imp.values[cand];
      if (!found || w > best_imp || (w == best_imp && cand < best)) {
        found = true;
        best = cand;
        best_imp = w;
      }
    }
    if (!found) {
      break;
    }
    path.append(best);
    appended_any = true;
  }
  return appended_any;
}

bool path_extension(PathState& path, const ImportanceVector& imp, double epsilon) {
  const int len = path.size();
  if (len < 3 || path.full()) {
    return false;
  }
  const NodeId tail = path.tail();
  bool found = false;
  double best_imp = 0.0;
  NodeId best_node = 0;
  int best_pivot = 0;
  for (int i = 0; i + 3 <= len; ++i) {
    if (hamming_distance(path.nodes[i], tail) != 1) {
      continue;
    }
    const NodeId after_pivot = path.nodes[i + 1];
    for (int bit = 0; bit < path.k; ++bit) {
      const NodeId cand = after_pivot ^ (NodeId{1} << bit);
      if (path.contains(cand)) {
        continue;
      }
      const double w = imp.values[cand];
      // Ascending pivot scan: equal (importance, mask) keeps the
      // earlier pivot.
      if (!found || w > best_imp || (w == best_imp && cand < best_node)) {
        found = true;
        best_imp = w;
        best_node = cand;
        best_pivot = i;
      }
    }
  }
  if (!found || !(best_imp > 0.5 - epsilon)) {
    return false;
  }
  std::reverse(path.nodes.begin() + best_pivot + 1, path.nodes.end());
  path.append(best_node);
  ++path.stats.extensions;
  return true;
}

double dead_end_score(NodeId candidate, const PathState& path, const ImportanceVector& imp,
                      double omega, int k) {
  const double own = path.contains(candidate) ? 0.0 : imp.values[candidate];
  const std::size_t n = std::size_t{1} << k;
  if (path.distinct == static_cast<int>(n)) {
    return own;  // proximity sum is empty
  }
  double prox = 0.0;
  for (NodeId j = 0; j < n; ++j) {
    if (path.contains(j) || j == candidate) {
      continue;
    }
    prox += static_cast<double>(k - hamming_distance(candidate, j)) * imp.values[j];
  }
  return own + omega * prox;
}

void dead_end_step(PathState& path, const ImportanceVector& imp, double omega) {
  const NodeId tail = path.tail();
  bool found = false;
  NodeId best = 0;
  double best_score = 0.0;
  for (int bit = 0; bit < path.k; ++bit) {
    const NodeId cand = tail ^ (NodeId{1} << bit);
    const double score = dead_end_score(cand, path, imp, omega, path.k);
    if (!found || score > best_score || (score == best_score && cand < best)) {
      found = true;
      best = cand;
      best_score = score;
    }
  }
  path.append(best);
  ++path.stats.dead_ends;
}

namespace {

void validate_config(const SearchConfig& config, int k) {
  if (config.k != k) {
    throw std::invalid_argument("path_search: config.k does not match the input vector");
  }
  if (config.cnot_budget < 0) {
    throw std::invalid_argument("path_search: cnot_budget must be >= 0");
  }
  const std::int64_t budget_nodes = static_cast<std::int64_t>(config.cnot_budget) + 2;
  if (budget_nodes > (std::int64_t{2} << k)) {
    throw std::invalid_argument("path_search: cnot_budget + 2 exceeds 2 * 2^k");
  }
  if (!(config.eps_step > 0.0) || !(config.eps_step <= config.eps_max) ||
      !(config.eps_max <= 0.5) || !(config.eps_start > 0.0) ||
      !(config.eps_start <= config.eps_max)) {
    throw std::invalid_argument("path_search: need 0 < eps_start, eps_step <= eps_max <= 0.5");
  }
}

}  // namespace

PathState path_search(const CoeffVector& alpha, const SearchConfig& config,
                      const StepCallback* on_mutation) {
  validate_config(config, alpha.k);
  const ImportanceVector imp = phase_importance(alpha, config.cnot_budget, config.gamma);
  PathState path = PathState::start(config.k, config.cnot_budget + 2);

  const auto note = [&path, on_mutation] {
    if (on_mutation != nullptr && *on_mutation) {
      (*on_mutation)(path);
    }
  };

  double completed_eps = 0.0;
  if (path_selection(path, imp, config, 0.0)) {
    note();
  }

  if (!path.full()) {
    const int sweep_steps =
        static_cast<int>((config.eps_max - config.eps_start) / config.eps_step + 1e-12) + 1;
    for (int step = 0; step < sweep_steps && !path.full(); ++step) {
      const double eps = config.eps_start + step * config.eps_step;
      while (!path.full()) {
        if (!path_extension(path, imp, eps)) {
          break;
        }
        note();
        if (path_selection(path, imp, config, eps)) {
          note();
        }
      }
      if (path.full()) {
        completed_eps = eps;
        break;
      }
      dead_end_step(path, imp, eps);
      note();
      if (path_selection(path, imp, config, eps)) {
        note();
      }
      if (path.full()) {
        completed_eps = eps;
        break;
      }
    }
  }

  while (!path.full()) {
    completed_eps = config.eps_max;
    dead_end_step(path, imp, config.eps_max);
    note();
    if (path_selection(path, imp, config, config.eps_max)) {
      note();
    }
  }

  path.stats.final_epsilon = completed_eps;
  return path;
}

PathState path_search(const PhaseVector& lambda, const SearchConfig& config,
                      const StepCallback* on_mutation) {
  return path_search(forward_wht(lambda), config, on_mutation);
}

}  // namespace dusk
