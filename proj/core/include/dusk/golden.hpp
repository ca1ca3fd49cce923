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

#include <array>
#include <string>
#include <vector>

#include "dusk/hypercube.hpp"
#include "dusk/spectral.hpp"

// Golden reference data: a fixed k=5 coefficient instance together with
// the error produced by discarding each single coefficient (table 1)
// and by the twenty best four-coefficient discards (table 2). The CLI
// `golden` command and the acceptance suite recompute every row.
namespace dusk::golden {

inline constexpr int kReferenceQubits = 5;
inline constexpr double kTable1Tolerance = 5e-4;
inline constexpr double kTable2Tolerance = 1e-3;

/// The 32 reference coefficients, indexed by parity mask.
const std::array<double, 32>& reference_alpha_values();

/// Same data as a CoeffVector.
CoeffVector reference_alpha();

/// Expected error when coefficient `index` alone is zeroed, per index.
const std::array<double, 32>& table1_expected_error();

struct Table2Row {
  std::array<NodeId, 4> discard;
  double expected_error;
};

/// The twenty lowest-error four-coefficient discards, ascending.
const std::array<Table2Row, 20>& table2_rows();

struct CheckRow {
  std::string label;
  double expected = 0.0;
  double computed = 0.0;

  double delta() const { return computed > expected ? computed - expected : expected - computed; }
};

/// Recomputes every table-1 row from `alpha` via the transform route
/// (zero one coefficient, inverse transform, error).
std::vector<CheckRow> check_table1(const CoeffVector& alpha);

/// Recomputes every table-2 row from `alpha` the same way.
std::vector<CheckRow> check_table2(const CoeffVector& alpha);

/// Largest |expected - computed| over a set of rows.
double max_delta(const std::vector<CheckRow>& rows);

}  // namespace dusk::golden
