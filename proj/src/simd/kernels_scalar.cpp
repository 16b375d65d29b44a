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

#include "fcfinfo/simd/kernels.hpp"

#include <cmath>
#include <limits>

#include "kernels_internal.hpp"

namespace fcfinfo::simd {
namespace detail {

void hermite_advance_lane(HermiteLanes& state, std::size_t lane, std::size_t steps,
                          std::span<double> out) {
  const std::size_t lanes = state.lanes();
  const double drive = state.drive[lane];
  const double coupling = state.coupling[lane];
  double prev = state.u_prev[lane];
  double cur = state.u_cur[lane];
  double blocks = state.blocks[lane];

  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t n = state.step + k;
    out[k * lanes + lane] = cur == 0.0 ? -std::numeric_limits<double>::infinity()
                                       : std::log(std::fabs(cur)) + blocks * kBlockLog;

    const double inv_root = 1.0 / std::sqrt(static_cast<double>(n + 1));
    const double root_ratio = std::sqrt(static_cast<double>(n)) * inv_root;
    const double next = (drive * inv_root) * cur - (coupling * root_ratio) * prev;
    prev = cur;
    cur = next;

    const double mag = std::fmax(std::fabs(prev), std::fabs(cur));
    if (mag > kBlockHigh) {
      prev *= kBlockLow;
      cur *= kBlockLow;
      blocks += 1.0;
    } else if (mag < kBlockLow && mag > 0.0) {
      prev *= kBlockHigh;
      cur *= kBlockHigh;
      blocks -= 1.0;
    }
  }

  state.u_prev[lane] = prev;
  state.u_cur[lane] = cur;
  state.blocks[lane] = blocks;
}

double sum_xlogx_range(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (v > 0.0) sum += v * std::log(v);
  }
  return sum;
}

double dot3_range(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  // Neumaier summation
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double term = a[i] * b[i] * c[i];
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace detail

namespace {

void hermite_advance_scalar(HermiteLanes& state, std::size_t steps, std::span<double> out) {
  for (std::size_t lane = 0; lane < state.lanes(); ++lane) {
    detail::hermite_advance_lane(state, lane, steps, out);
  }
  state.step += steps;
}

double sum_xlogx_scalar(std::span<const double> p) { return detail::sum_xlogx_range(p); }

double dot3_scalar(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  return detail::dot3_range(a, b, c);
}

constexpr KernelTable kScalarTable{
    "scalar",
    &hermite_advance_scalar,
    &sum_xlogx_scalar,
    &dot3_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalarTable; }

}  // namespace fcfinfo::simd
