#include "mincut/kernels.hpp"

#if defined(MINCUT_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace mincut::kernels::avx2 {

#if defined(MINCUT_HAVE_AVX2)

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Lanes where lo <= x <= hi, as all-ones 32-bit masks.
inline __m256i in_range(__m256i x, __m256i lo, __m256i hi) {
  const __m256i outside = _mm256_or_si256(_mm256_cmpgt_epi32(lo, x), _mm256_cmpgt_epi32(x, hi));
  return _mm256_xor_si256(outside, _mm256_set1_epi32(-1));
}

inline __m256i load(const std::int32_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

}  // namespace

Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side) {
  const std::size_t m = edges.u.size();
  const int* base = reinterpret_cast<const int*>(side.data());
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256i iu = load(edges.u.data() + i);
    const __m256i iv = load(edges.v.data() + i);
    const __m256i su = _mm256_i32gather_epi32(base, iu, 4);
    const __m256i sv = _mm256_i32gather_epi32(base, iv, 4);
    const __m256i mask32 = _mm256_sub_epi32(_mm256_setzero_si256(), _mm256_xor_si256(su, sv));
    const __m256i mask_lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(mask32));
    const __m256i mask_hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(mask32, 1));
    const __m256i w_lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.w.data() + i));
    const __m256i w_hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.w.data() + i + 4));
    acc_lo = _mm256_add_epi64(acc_lo, _mm256_and_si256(w_lo, mask_lo));
    acc_hi = _mm256_add_epi64(acc_hi, _mm256_and_si256(w_hi, mask_hi));
  }
  std::uint64_t total = hsum_epi64(acc_lo) + hsum_epi64(acc_hi);
  for (; i < m; ++i) {
    const std::uint64_t mask = 0 - static_cast<std::uint64_t>(side[edges.u[i]] ^ side[edges.v[i]]);
    total += edges.w[i] & mask;
  }
  return static_cast<Weight>(total);
}

void apply_update(RangeCounterBank::Lanes l, std::int32_t a, std::int32_t b, std::int64_t w) {
  const __m256i va = _mm256_set1_epi32(a);
  const __m256i vb = _mm256_set1_epi32(b);
  const __m256i vw = _mm256_set1_epi64x(w);
  for (std::size_t i = 0; i < l.padded; i += 8) {
    const __m256i alo1 = load(l.a_lo1 + i), ahi1 = load(l.a_hi1 + i);
    const __m256i alo2 = load(l.a_lo2 + i), ahi2 = load(l.a_hi2 + i);
    const __m256i a_in_a = _mm256_or_si256(in_range(va, alo1, ahi1), in_range(va, alo2, ahi2));
    const __m256i b_in_a = _mm256_or_si256(in_range(vb, alo1, ahi1), in_range(vb, alo2, ahi2));

    const __m256i blo1 = load(l.b_lo1 + i), bhi1 = load(l.b_hi1 + i);
    const __m256i blo2 = load(l.b_lo2 + i), bhi2 = load(l.b_hi2 + i);
    const __m256i comp = load(l.b_comp + i);
    const __m256i a_in_b_r = _mm256_or_si256(in_range(va, blo1, bhi1), in_range(va, blo2, bhi2));
    const __m256i b_in_b_r = _mm256_or_si256(in_range(vb, blo1, bhi1), in_range(vb, blo2, bhi2));
    // comp lanes select the complement of A instead of the explicit B ranges.
    const __m256i a_in_b = _mm256_blendv_epi8(a_in_b_r, _mm256_andnot_si256(a_in_a, _mm256_set1_epi32(-1)), comp);
    const __m256i b_in_b = _mm256_blendv_epi8(b_in_b_r, _mm256_andnot_si256(b_in_a, _mm256_set1_epi32(-1)), comp);

    const __m256i hit = _mm256_or_si256(_mm256_and_si256(a_in_a, b_in_b), _mm256_and_si256(b_in_a, a_in_b));
    if (_mm256_testz_si256(hit, hit)) continue;
    const __m256i hit_lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(hit));
    const __m256i hit_hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(hit, 1));
    __m256i* acc = reinterpret_cast<__m256i*>(l.acc + i);
    _mm256_storeu_si256(acc, _mm256_add_epi64(_mm256_loadu_si256(acc), _mm256_and_si256(vw, hit_lo)));
    _mm256_storeu_si256(acc + 1, _mm256_add_epi64(_mm256_loadu_si256(acc + 1), _mm256_and_si256(vw, hit_hi)));
  }
}

#else

Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side) {
  return scalar::crossing_weight(edges, side);
}

void apply_update(RangeCounterBank::Lanes lanes, std::int32_t a, std::int32_t b, std::int64_t w) {
  scalar::apply_update(lanes, a, b, w);
}

#endif

}  // namespace mincut::kernels::avx2
