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

#include <cmath>
#include <cstddef>
#include <span>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo::simd::detail {

inline constexpr double kBlockHigh = 0x1p256;
inline constexpr double kBlockLow = 0x1p-256;
inline constexpr double kBlockLog = 256.0 * 0.69314718055994530941723212145817656807550013436026;

// Single-lane scalar path; the AVX2 kernel uses it for the remainder lanes.
// Does not touch state.step.
void hermite_advance_lane(HermiteLanes& state, std::size_t lane, std::size_t steps,
                          std::span<double> out);

double sum_xlogx_range(std::span<const double> p);

double dot3_range(std::span<const double> a, std::span<const double> b, std::span<const double> c);

}  // namespace fcfinfo::simd::detail
