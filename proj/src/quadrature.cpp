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

#include "fcfinfo/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo {
namespace {

constexpr std::size_t kExtraNodes = 16;
constexpr int kMaxNewton = 100;

// Hermite functions psi_{k-1}, psi_k at y, carried as mantissa * exp(log_scale)
// so nothing underflows far outside the classical region.
struct HermitePair {
  double prev;
  double cur;
  double log_scale;
};

HermitePair hermite_function_pair(std::size_t k, double y) {
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = -0.5 * y * y - 0.25 * std::log(std::numbers::pi);
  for (std::size_t j = 0; j < k; ++j) {
    const double jd = static_cast<double>(j);
    const double next = std::sqrt(2.0 / (jd + 1.0)) * y * cur - std::sqrt(jd / (jd + 1.0)) * prev;
    prev = cur;
    cur = next;
    const double mag = std::fmax(std::fabs(prev), std::fabs(cur));
    if (mag > 1e150) {
      prev *= 1e-150;
      cur *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  return {prev, cur, log_scale};
}

double unscale(double mantissa, double log_scale) {
  if (mantissa == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::fabs(mantissa)) + log_scale), mantissa);
}

}  // namespace

double hermite_function(std::size_t k, double y) {
  const auto pair = hermite_function_pair(k, y);
  return unscale(pair.cur, pair.log_scale);
}

GaussHermiteRule gauss_hermite_rule(std::size_t count) {
  if (count == 0) throw std::invalid_argument("Gauss-Hermite rule needs at least one node");

  GaussHermiteRule rule;
  rule.nodes.assign(count, 0.0);
  rule.weights.assign(count, 0.0);
  rule.scaled_weights.assign(count, 0.0);

  const double nd = static_cast<double>(count);
  const std::size_t half = (count + 1) / 2;
  std::vector<double> roots(half);
  double z = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    // Asymptotic starting points for the largest roots, then extrapolation.
    if (i == 0) {
      z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(nd, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * roots[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * roots[1];
    } else {
      z = 2.0 * z - roots[i - 2];
    }

    for (int iter = 0; iter < kMaxNewton; ++iter) {
      const auto hp = hermite_function_pair(count, z);
      // psi_N' = sqrt(2N) psi_{N-1} - z psi_N; both share the scale.
      const double step = hp.cur / (std::sqrt(2.0 * nd) * hp.prev - z * hp.cur);
      z -= step;
      if (std::fabs(step) <= 1e-15 * std::fmax(1.0, std::fabs(z))) break;
    }
    roots[i] = z;
    const auto at_root = hermite_function_pair(count, z);
    const double derivative_factor = unscale(std::sqrt(2.0 * nd) * at_root.prev, at_root.log_scale);

    // w exp(t^2) = 2 / psi_N'(t)^2 at a root.
    const double scaled = 2.0 / (derivative_factor * derivative_factor);
    const double weight = scaled * std::exp(-z * z);

    const std::size_t hi = count - 1 - i;
    rule.nodes[i] = -z;
    rule.nodes[hi] = z;
    rule.weights[i] = rule.weights[hi] = weight;
    rule.scaled_weights[i] = rule.scaled_weights[hi] = scaled;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

double overlap_amplitude(std::size_t m, std::size_t n, const OscillatorPair& pair) {
  pair.validate();
  if (m > kQuadratureMaxLevel || n > kQuadratureMaxLevel) {
    throw std::invalid_argument("overlap quadrature supports levels up to " +
                                std::to_string(kQuadratureMaxLevel));
  }

  // -(x+a)^2/2 - x^2/(2 l^2) = -alpha (x - centre)^2 + const
  const double inv_l2 = 1.0 / (pair.l * pair.l);
  const double alpha = 0.5 * (1.0 + inv_l2);
  const double centre = -pair.a / (1.0 + inv_l2);
  const double inv_root_alpha = 1.0 / std::sqrt(alpha);

  const auto rule = gauss_hermite_rule((m + n) / 2 + 1 + kExtraNodes);
  const std::size_t count = rule.nodes.size();

  std::vector<double> dx(count), initial(count), final_state(count);
  const double inv_root_l = 1.0 / std::sqrt(pair.l);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = centre + rule.nodes[i] * inv_root_alpha;
    dx[i] = rule.scaled_weights[i] * inv_root_alpha;
    initial[i] = hermite_function(m, x + pair.a);
    final_state[i] = hermite_function(n, x / pair.l) * inv_root_l;
  }
  return simd::active_kernels().dot3(dx, initial, final_state);
}

double overlap_quadrature(std::size_t m, std::size_t n, const OscillatorPair& pair) {
  const double amplitude = overlap_amplitude(m, n, pair);
  return amplitude * amplitude;
}

}  // namespace fcfinfo
