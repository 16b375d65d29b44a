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

// AVX2 variants. This translation unit is built with -mavx2 -mfma and must
// only be entered after the runtime CPUID check in dispatch.cpp.

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "fcfinfo/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace fcfinfo::simd {
namespace {

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

// Integer-valued int64 lanes (|v| < 2^51) to double.
inline __m256d small_epi64_to_pd(__m256i v) {
  const __m256d magic = _mm256_set1_pd(0x1.8p52);
  return _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_add_epi64(v, _mm256_castpd_si256(magic))), magic);
}

// Natural log for strictly positive finite lanes, subnormals included.
// ln x = e ln2 + 2 atanh((m-1)/(m+1)) with m in [sqrt(1/2), sqrt(2)); the
// atanh series is truncated after z^11, z = s^2 <= 0.0295.
inline __m256d log_pd(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);

  const __m256d subnormal = _mm256_cmp_pd(x, _mm256_set1_pd(0x1p-1022), _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, _mm256_set1_pd(0x1p54)), subnormal);
  __m256d e_bias = _mm256_and_pd(subnormal, _mm256_set1_pd(54.0));

  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i exp_one = _mm256_set1_epi64x(0x3FF0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), exp_one));
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(small_epi64_to_pd(biased), _mm256_set1_pd(1023.0));
  e = _mm256_sub_pd(e, e_bias);

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.41421356237309504880), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, one));

  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d z = _mm256_mul_pd(s, s);

  __m256d poly = _mm256_set1_pd(1.0 / 23.0);
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 21.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 19.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 17.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 15.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 13.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 11.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 9.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 7.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 5.0));
  poly = _mm256_fmadd_pd(poly, z, _mm256_set1_pd(1.0 / 3.0));
  poly = _mm256_mul_pd(poly, z);

  const __m256d two_s = _mm256_add_pd(s, s);
  const __m256d log_m = _mm256_fmadd_pd(two_s, poly, two_s);

  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  return _mm256_add_pd(_mm256_fmadd_pd(e, ln2_hi, log_m), _mm256_mul_pd(e, ln2_lo));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

void hermite_advance_avx2(HermiteLanes& state, std::size_t steps, std::span<double> out) {
  const std::size_t lanes = state.lanes();
  const std::size_t full = lanes - lanes % 4;

  const __m256d high = _mm256_set1_pd(detail::kBlockHigh);
  const __m256d low = _mm256_set1_pd(detail::kBlockLow);
  const __m256d block_log = _mm256_set1_pd(detail::kBlockLog);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d neg_inf = _mm256_set1_pd(-std::numeric_limits<double>::infinity());

  for (std::size_t lane = 0; lane < full; lane += 4) {
    const __m256d drive = _mm256_loadu_pd(&state.drive[lane]);
    const __m256d coupling = _mm256_loadu_pd(&state.coupling[lane]);
    __m256d prev = _mm256_loadu_pd(&state.u_prev[lane]);
    __m256d cur = _mm256_loadu_pd(&state.u_cur[lane]);
    __m256d blocks = _mm256_loadu_pd(&state.blocks[lane]);

    for (std::size_t k = 0; k < steps; ++k) {
      const std::size_t n = state.step + k;

      const __m256d mag_cur = abs_pd(cur);
      const __m256d is_zero = _mm256_cmp_pd(mag_cur, zero, _CMP_EQ_OQ);
      const __m256d safe = _mm256_blendv_pd(mag_cur, one, is_zero);
      const __m256d logv = _mm256_fmadd_pd(blocks, block_log, log_pd(safe));
      _mm256_storeu_pd(&out[k * lanes + lane], _mm256_blendv_pd(logv, neg_inf, is_zero));

      const double inv_root = 1.0 / std::sqrt(static_cast<double>(n + 1));
      const double root_ratio = std::sqrt(static_cast<double>(n)) * inv_root;
      const __m256d c1 = _mm256_mul_pd(drive, _mm256_set1_pd(inv_root));
      const __m256d c2 = _mm256_mul_pd(coupling, _mm256_set1_pd(root_ratio));
      const __m256d next = _mm256_sub_pd(_mm256_mul_pd(c1, cur), _mm256_mul_pd(c2, prev));
      prev = cur;
      cur = next;

      const __m256d mag = _mm256_max_pd(abs_pd(prev), abs_pd(cur));
      const __m256d too_high = _mm256_cmp_pd(mag, high, _CMP_GT_OQ);
      const __m256d too_low = _mm256_and_pd(_mm256_cmp_pd(mag, low, _CMP_LT_OQ),
                                            _mm256_cmp_pd(mag, zero, _CMP_GT_OQ));
      const __m256d factor = _mm256_blendv_pd(_mm256_blendv_pd(one, low, too_high), high, too_low);
      prev = _mm256_mul_pd(prev, factor);
      cur = _mm256_mul_pd(cur, factor);
      blocks = _mm256_add_pd(blocks, _mm256_and_pd(too_high, one));
      blocks = _mm256_sub_pd(blocks, _mm256_and_pd(too_low, one));
    }

    _mm256_storeu_pd(&state.u_prev[lane], prev);
    _mm256_storeu_pd(&state.u_cur[lane], cur);
    _mm256_storeu_pd(&state.blocks[lane], blocks);
  }

  for (std::size_t lane = full; lane < lanes; ++lane) {
    detail::hermite_advance_lane(state, lane, steps, out);
  }
  state.step += steps;
}

double sum_xlogx_avx2(std::span<const double> p) {
  const std::size_t count = p.size();
  const std::size_t full = count - count % 4;
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  __m256d acc = zero;
  for (std::size_t i = 0; i < full; i += 4) {
    const __m256d v = _mm256_loadu_pd(&p[i]);
    const __m256d positive = _mm256_cmp_pd(v, zero, _CMP_GT_OQ);
    const __m256d safe = _mm256_blendv_pd(one, v, positive);
    acc = _mm256_add_pd(acc, _mm256_and_pd(positive, _mm256_mul_pd(v, log_pd(safe))));
  }
  return hsum(acc) + detail::sum_xlogx_range(p.subspan(full));
}

double dot3_avx2(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  const std::size_t count = a.size();
  const std::size_t full = count - count % 4;

  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  for (std::size_t i = 0; i < full; i += 4) {
    const __m256d term = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i])),
                                       _mm256_loadu_pd(&c[i]));
    const __m256d t = _mm256_add_pd(sum, term);
    const __m256d sum_bigger = _mm256_cmp_pd(abs_pd(sum), abs_pd(term), _CMP_GE_OQ);
    const __m256d lost = _mm256_blendv_pd(_mm256_add_pd(_mm256_sub_pd(term, t), sum),
                                          _mm256_add_pd(_mm256_sub_pd(sum, t), term), sum_bigger);
    comp = _mm256_add_pd(comp, lost);
    sum = t;
  }

  alignas(32) double sums[4];
  alignas(32) double comps[4];
  _mm256_store_pd(sums, sum);
  _mm256_store_pd(comps, comp);

  // Fold the four lane partials and the tail through the scalar compensated
  // path so the final rounding matches its error bound.
  const double tail = detail::dot3_range(a.subspan(full), b.subspan(full), c.subspan(full));
  const double ones[4] = {1.0, 1.0, 1.0, 1.0};
  const double folded = detail::dot3_range(sums, ones, ones);
  return folded + ((comps[0] + comps[1]) + (comps[2] + comps[3])) + tail;
}

constexpr KernelTable kAvx2Table{
    "avx2",
    &hermite_advance_avx2,
    &sum_xlogx_avx2,
    &dot3_avx2,
};

}  // namespace

namespace detail {
const KernelTable& avx2_table() noexcept { return kAvx2Table; }
}  // namespace detail

}  // namespace fcfinfo::simd
