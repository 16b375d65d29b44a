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
#include <vector>

namespace fcfinfo {

// Which Hermite recurrence drives the sequence.
//   standard:  H[n+1] = 2w H[n] - 2n H[n-1]   (real argument, l > 1)
//   modified:  H[n+1] = 2w H[n] + 2n H[n-1]   (H[n](iw) = i^n Hmod[n](w), l < 1)
enum class HermiteRegime { standard = +1, modified = -1 };

struct HermiteSignedArg {
  double w = 0.0;  // argument magnitude, >= 0
  HermiteRegime regime = HermiteRegime::standard;
};

// Coefficients of the scaled recurrence
//   u[n+1] = drive * u[n] / sqrt(n+1) - coupling * sqrt(n/(n+1)) * u[n-1]
// whose solution satisfies |u[n]| = (ratio/2)^(n/2) |H[n](w)| / sqrt(n!).
struct HermiteCoefficients {
  double drive = 0.0;     // w * sqrt(2 * ratio)
  double coupling = 0.0;  // +ratio (standard) or -ratio (modified)
};

// Validates the argument and ratio; throws std::invalid_argument when w is
// negative or non-finite or ratio lies outside [0, 1).
HermiteCoefficients hermite_coefficients(HermiteSignedArg arg, double ratio);

// g[n] = (ratio/2)^(n/2) |H[n](w)| / sqrt(n!) for n = 0..n_max.
//
// Individual values can exceed the double range for large w (g grows like
// exp(w^2/2) before the geometric factor wins); use the log form when that
// matters.
std::vector<double> normalized_hermite_sequence(HermiteSignedArg arg, double ratio,
                                                std::size_t n_max);

// ln g[n] for n = 0..n_max, finite for every n unless g[n] is exactly zero
// (in which case -inf). Computed with block-exponent rescaling, so it never
// overflows or underflows.
std::vector<double> log_normalized_hermite_sequence(HermiteSignedArg arg, double ratio,
                                                    std::size_t n_max);

// Same, driven directly by recurrence coefficients.
std::vector<double> log_normalized_hermite_sequence(HermiteCoefficients coeffs,
                                                    std::size_t n_max);

}  // namespace fcfinfo
