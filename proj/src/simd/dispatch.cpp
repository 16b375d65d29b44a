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

#include <atomic>

#include "fcfinfo/simd/kernels.hpp"

namespace fcfinfo::simd {

#if defined(FCFINFO_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table() noexcept;
}
#endif

namespace {

bool cpu_has_avx2() noexcept {
#if defined(FCFINFO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<const KernelTable*> g_forced{nullptr};

}  // namespace

const KernelTable* avx2_kernels() noexcept {
#if defined(FCFINFO_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  if (const KernelTable* forced = g_forced.load(std::memory_order_acquire)) {
    return *forced;
  }
  static const KernelTable& best = avx2_kernels() ? *avx2_kernels() : scalar_kernels();
  return best;
}

void force_kernels(const KernelTable* table) noexcept {
  g_forced.store(table, std::memory_order_release);
}

}  // namespace fcfinfo::simd
