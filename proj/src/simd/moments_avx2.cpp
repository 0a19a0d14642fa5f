#include "invbench/simd/moments.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace invbench::simd {

namespace {

__attribute__((target("avx2"))) inline std::int64_t hsum(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

}  // namespace

// Four 64-bit lanes per accumulator; _mm256_mul_epi32 forms exact signed
// 32x32->64 products of the low halves of each lane.
__attribute__((target("avx2"))) Moments moments_avx2(std::span<const std::int32_t> x,
                                                    std::span<const std::int32_t> y) {
  __m256i sx = _mm256_setzero_si256();
  __m256i sy = _mm256_setzero_si256();
  __m256i sxx = _mm256_setzero_si256();
  __m256i syy = _mm256_setzero_si256();
  __m256i sxy = _mm256_setzero_si256();

  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(x.data() + i)));
    const __m256i b = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y.data() + i)));
    sx = _mm256_add_epi64(sx, a);
    sy = _mm256_add_epi64(sy, b);
    sxx = _mm256_add_epi64(sxx, _mm256_mul_epi32(a, a));
    syy = _mm256_add_epi64(syy, _mm256_mul_epi32(b, b));
    sxy = _mm256_add_epi64(sxy, _mm256_mul_epi32(a, b));
  }

  Moments m = moments_scalar(x.subspan(i), y.subspan(i));
  m.n = static_cast<std::int64_t>(n);
  m.sum_x += hsum(sx);
  m.sum_y += hsum(sy);
  m.sum_xx += hsum(sxx);
  m.sum_yy += hsum(syy);
  m.sum_xy += hsum(sxy);
  return m;
}

}  // namespace invbench::simd

#endif
