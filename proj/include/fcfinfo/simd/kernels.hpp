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

// Data-parallel inner loops. Each kernel has a portable scalar reference in
// kernels_scalar.cpp and, on x86-64, an AVX2 variant in kernels_avx2.cpp.
// The variant is picked once at runtime from CPUID; tests compare the two.

#include <cstddef>
#include <span>
#include <string_view>

namespace fcfinfo::simd {

// Structure-of-arrays state for a batch of independent normalized Hermite
// recurrences
//
//   u[n+1] = drive * u[n] / sqrt(n+1)  -  coupling * sqrt(n/(n+1)) * u[n-1]
//
// The true value of lane i at step n is u_cur[i] * 2^(kBlockBits * blocks[i]);
// blocks are adjusted whenever a lane leaves [2^-kBlockBits, 2^kBlockBits].
// All lanes share the step counter.
struct HermiteLanes {
  static constexpr int kBlockBits = 256;

  std::span<const double> drive;
  std::span<const double> coupling;
  std::span<double> u_prev;
  std::span<double> u_cur;
  std::span<double> blocks;
  std::size_t step = 0;

  std::size_t lanes() const noexcept { return u_cur.size(); }
};

struct KernelTable {
  std::string_view name;

  // Emits log|u_n| (with the block exponent folded in) for n = step ..
  // step+steps-1 into out[(n - step) * lanes + lane], then leaves the state
  // at step + steps. A lane whose value is exactly zero emits -inf.
  void (*hermite_advance)(HermiteLanes& state, std::size_t steps, std::span<double> out);

  // Sum of p*ln(p) over the input, with 0*ln(0) = 0. Inputs must be >= 0.
  double (*sum_xlogx)(std::span<const double> p);

  // Compensated sum of a[i]*b[i]*c[i].
  double (*dot3)(std::span<const double> a, std::span<const double> b, std::span<const double> c);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the binary was built without AVX2 support or the CPU lacks
// AVX2/FMA.
const KernelTable* avx2_kernels() noexcept;

// The table used by the library: the widest supported variant, unless a test
// has pinned one through force_kernels().
const KernelTable& active_kernels() noexcept;

// Test hook. Passing nullptr restores automatic selection.
void force_kernels(const KernelTable* table) noexcept;

}  // namespace fcfinfo::simd
