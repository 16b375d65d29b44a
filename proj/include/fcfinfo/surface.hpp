/*
 * Copyright 2026 The fcfinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "fcfinfo/fcf.hpp"
#include "fcfinfo/index_map.hpp"
#include "fcfinfo/info_theory.hpp"

namespace fcfinfo {

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  // min + i (max - min) / (steps - 1); the last point is exactly max.
  double at(std::size_t i) const noexcept;
};

struct SweepConfig {
  AxisRange a{0.0, 4.0, 100};
  AxisRange l{1.05, 3.0, 100};
  Factorization split = Factorization::parity_split();
  double tail_tolerance = 1e-12;
  std::size_t n_cap = 100000;
  LogBase log_base = LogBase::e;

  // Throws std::invalid_argument on fewer than 2 steps, non-finite or empty
  // ranges, l_min <= 0, a split that is not bipartite, or a tolerance outside
  // (0, 1).
  void validate() const;
};

struct MiRow {
  double a = 0.0;
  double l = 0.0;
  double h_a = 0.0;
  double h_b = 0.0;
  double h_ab = 0.0;
  double mi = 0.0;
  double tail_mass = 0.0;
  std::size_t n_used = 0;
};

// One grid point: renormalized FCF distribution, reshaped by `split`.
MiRow evaluate_point(const OscillatorPair& pair, const SweepConfig& config);

// Row-major over the grid, a outer and l inner. Each a-row is evaluated as one
// SIMD batch over l. A TruncationFailure propagates with the offending pair.
std::vector<MiRow> compute_surface(const SweepConfig& config);

// Header `a,l,H_A,H_B,H_AB,MI,tail_mass,n_used`, then one line per row with
// 12 significant digits, '\n' line endings. Slightly negative MI from
// rounding is printed as 0.
void write_surface_csv(std::ostream& os, const std::vector<MiRow>& rows);

}  // namespace fcfinfo
