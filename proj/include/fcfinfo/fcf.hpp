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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcfinfo/special_fn.hpp"

namespace fcfinfo {

// Two displaced harmonic wells. The initial well has unit length scale; `a`
// is the shift of the final minimum and `l` the final length scale, both in
// initial-oscillator units.
struct OscillatorPair {
  double a = 0.0;
  double l = 1.0;

  // Throws std::invalid_argument unless a is finite and l is finite and > 0.
  void validate() const;
};

// Below this distance from l = 1 the closed form is replaced by its Poisson
// limit.
inline constexpr double kLimitSwitchDelta = 1e-6;

inline bool uses_equal_freq_branch(const OscillatorPair& pair) {
  return pair.l - 1.0 < kLimitSwitchDelta && 1.0 - pair.l < kLimitSwitchDelta;
}

// Hermite argument and geometric ratio of the closed form:
//   w = |a| l / sqrt((l^2+1)|l^2-1|),  ratio = |l^2-1| / (l^2+1).
// Undefined at l = 1 (w diverges); see hermite_coefficients_for, which is not.
struct ClosedFormArgs {
  HermiteSignedArg arg;
  double ratio = 0.0;
};
ClosedFormArgs closed_form_args(const OscillatorPair& pair);

// Recurrence coefficients for the pair, evaluated without forming w:
//   drive = sqrt(2) |a| l / (l^2+1),  coupling = (l^2-1) / (l^2+1).
HermiteCoefficients hermite_coefficients_for(const OscillatorPair& pair);

// ln of the n-independent factor 2l/(l^2+1) * exp(-a^2/(l^2+1)).
double log_fcf_prefactor(const OscillatorPair& pair);

// P_0n(a, l), the probability of the 0 -> n vibronic transition. Pairs with
// |l - 1| < kLimitSwitchDelta go through fcf_0n_equal_freq.
double fcf_0n(const OscillatorPair& pair, long long n);

// Poisson limit at l = 1: exp(-a^2/2) (a^2/2)^n / n!.
double fcf_0n_equal_freq(double a, long long n);

struct FcfDistribution {
  OscillatorPair params;
  std::vector<double> probs;  // probs[n] = P_0n, n = 0..N_max
  double tail_mass = 0.0;     // 1 - sum of the unscaled probs
  bool renormalized = false;

  std::size_t n_used() const noexcept { return probs.size(); }
};

struct TruncationOptions {
  double tail_tolerance = 1e-12;
  std::size_t n_cap = 100000;  // maximum number of terms
  bool renormalize = false;
};

class TruncationFailure : public std::runtime_error {
 public:
  TruncationFailure(OscillatorPair pair, std::size_t n_cap);

  const OscillatorPair& pair() const noexcept { return pair_; }
  std::size_t n_cap() const noexcept { return n_cap_; }

 private:
  OscillatorPair pair_;
  std::size_t n_cap_;
};

// Evaluates P_0n for n = 0, 1, ... until the cumulative mass reaches
// 1 - tail_tolerance and the last 8 terms are each below tail_tolerance/100.
// Trailing exact zeros are dropped. Throws TruncationFailure if n_cap terms
// are used up first.
FcfDistribution fcf_distribution(const OscillatorPair& pair, const TruncationOptions& options = {});

// Batched form; lanes run through the active SIMD kernel together. Results
// match per-pair fcf_distribution calls to rounding.
std::vector<FcfDistribution> fcf_distribution_batch(std::span<const OscillatorPair> pairs,
                                                    const TruncationOptions& options = {});

}  // namespace fcfinfo
