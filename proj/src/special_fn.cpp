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

#include "fcfinfo/special_fn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo {

HermiteCoefficients hermite_coefficients(HermiteSignedArg arg, double ratio) {
  if (!std::isfinite(arg.w) || arg.w < 0.0) {
    throw std::invalid_argument("hermite argument must be finite and non-negative, got " +
                                std::to_string(arg.w));
  }
  if (!(ratio >= 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("hermite ratio must lie in [0, 1), got " + std::to_string(ratio));
  }
  const double sign = arg.regime == HermiteRegime::standard ? 1.0 : -1.0;
  return {arg.w * std::sqrt(2.0 * ratio), sign * ratio};
}

std::vector<double> log_normalized_hermite_sequence(HermiteCoefficients coeffs, std::size_t n_max) {
  const double drive[1] = {coeffs.drive};
  const double coupling[1] = {coeffs.coupling};
  double prev[1] = {0.0};
  double cur[1] = {1.0};
  double blocks[1] = {0.0};
  simd::HermiteLanes lanes{drive, coupling, prev, cur, blocks, 0};

  std::vector<double> out(n_max + 1);
  simd::active_kernels().hermite_advance(lanes, n_max + 1, out);
  return out;
}

std::vector<double> log_normalized_hermite_sequence(HermiteSignedArg arg, double ratio,
                                                    std::size_t n_max) {
  return log_normalized_hermite_sequence(hermite_coefficients(arg, ratio), n_max);
}

std::vector<double> normalized_hermite_sequence(HermiteSignedArg arg, double ratio,
                                                std::size_t n_max) {
  std::vector<double> g = log_normalized_hermite_sequence(arg, ratio, n_max);
  for (double& v : g) v = std::exp(v);
  return g;
}

}  // namespace fcfinfo
