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

#include "dusk/golden.hpp"

#include <algorithm>
#include <span>

namespace dusk::golden {

namespace {

// Index-ordered coefficients of the reference instance.
constexpr std::array<double, 32> kAlpha = {
    2.7625,  0.3161,  -0.5961, -0.4804, 0.3480,  0.0555,  0.3844,  -0.3860,
    -0.0296, -0.1648, 0.0958,  -0.3258, 0.1719,  -0.9482, -0.0628, -0.3147,
    0.5047,  0.0409,  0.1487,  0.1174,  -0.3464, 0.0175,  0.2431,  -0.1376,
    -0.1365, -0.0478, 0.2774,  0.4631,  -0.1144, -0.3891, 0.0752,  -0.2298,
};

// Error after zeroing each single coefficient, same index order.
constexpr std::array<double, 32> kTable1Error = {
    0.9821, 0.1574, 0.2937, 0.2379, 0.1731, 0.0277, 0.1910, 0.1918,
    0.0148, 0.0823, 0.0479, 0.1622, 0.0859, 0.4565, 0.0314, 0.1567,
    0.2497, 0.0205, 0.0743, 0.0587, 0.1723, 0.0087, 0.1213, 0.0688,
    0.0682, 0.0239, 0.1383, 0.2295, 0.0572, 0.1933, 0.0376, 0.1147,
};

constexpr std::array<Table2Row, 20> kTable2 = {{
    {{8, 17, 21, 25}, 0.0358},  {{5, 8, 17, 21}, 0.0385},  {{5, 8, 21, 25}, 0.0404},
    {{8, 14, 17, 21}, 0.0412},  {{5, 17, 21, 25}, 0.0428}, {{8, 14, 21, 25}, 0.0430},
    {{5, 8, 17, 25}, 0.0445},   {{5, 8, 14, 21}, 0.0453},  {{14, 17, 21, 25}, 0.0453},
    {{8, 17, 21, 30}, 0.0461},  {{8, 14, 17, 25}, 0.0468}, {{5, 14, 17, 21}, 0.0474},
    {{8, 21, 25, 30}, 0.0477},  {{5, 8, 14, 17}, 0.0489},  {{5, 14, 21, 25}, 0.0490},
    {{5, 8, 21, 30}, 0.0498},   {{17, 21, 25, 30}, 0.0498}, {{5, 8, 14, 25}, 0.0504},
    {{8, 17, 25, 30}, 0.0512},  {{5, 17, 21, 30}, 0.0517},
}};

double error_after_discard(const CoeffVector& alpha, std::span<const NodeId> discard) {
  const PhaseVector target = inverse_wht(alpha);
  std::vector<double> kept = alpha.values;
  for (NodeId s : discard) {
    kept[s] = 0.0;
  }
  return synthesis_error(target, inverse_wht(CoeffVector(std::move(kept))));
}

}  // namespace

const std::array<double, 32>& reference_alpha_values() { return kAlpha; }

CoeffVector reference_alpha() {
  return CoeffVector(std::vector<double>(kAlpha.begin(), kAlpha.end()));
}

const std::array<double, 32>& table1_expected_error() { return kTable1Error; }

const std::array<Table2Row, 20>& table2_rows() { return kTable2; }

std::vector<CheckRow> check_table1(const CoeffVector& alpha) {
  std::vector<CheckRow> rows;
  rows.reserve(alpha.size());
  for (NodeId s = 0; s < alpha.size(); ++s) {
    CheckRow row;
    row.label = "index " + std::to_string(s);
    row.expected = kTable1Error[s];
    row.computed = error_after_discard(alpha, std::span<const NodeId>(&s, 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CheckRow> check_table2(const CoeffVector& alpha) {
  std::vector<CheckRow> rows;
  rows.reserve(kTable2.size());
  for (const Table2Row& ref : kTable2) {
    CheckRow row;
    row.label = "discard {" + std::to_string(ref.discard[0]) + "," +
                std::to_string(ref.discard[1]) + "," + std::to_string(ref.discard[2]) + "," +
                std::to_string(ref.discard[3]) + "}";
    row.expected = ref.expected_error;
    row.computed = error_after_discard(alpha, std::span<const NodeId>(ref.discard));
    rows.push_back(std::move(row));
  }
  return rows;
}

double max_delta(const std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (const CheckRow& row : rows) {
    worst = std::max(worst, row.delta());
  }
  return worst;
}

}  // namespace dusk::golden
