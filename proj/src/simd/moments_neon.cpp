#include "invbench/simd/moments.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace invbench::simd {

Moments moments_neon(std::span<const std::int32_t> x, std::span<const std::int32_t> y) {
  int64x2_t sx = vdupq_n_s64(0);
  int64x2_t sy = vdupq_n_s64(0);
  int64x2_t sxx = vdupq_n_s64(0);
  int64x2_t syy = vdupq_n_s64(0);
  int64x2_t sxy = vdupq_n_s64(0);

  const std::size_t n = x.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int32x4_t a = vld1q_s32(x.data() + i);
    const int32x4_t b = vld1q_s32(y.data() + i);
    sx = vpadalq_s32(sx, a);
    sy = vpadalq_s32(sy, b);
    sxx = vmlal_s32(sxx, vget_low_s32(a), vget_low_s32(a));
    sxx = vmlal_high_s32(sxx, a, a);
    syy = vmlal_s32(syy, vget_low_s32(b), vget_low_s32(b));
    syy = vmlal_high_s32(syy, b, b);
    sxy = vmlal_s32(sxy, vget_low_s32(a), vget_low_s32(b));
    sxy = vmlal_high_s32(sxy, a, b);
  }

  Moments m = moments_scalar(x.subspan(i), y.subspan(i));
  m.n = static_cast<std::int64_t>(n);
  m.sum_x += vaddvq_s64(sx);
  m.sum_y += vaddvq_s64(sy);
  m.sum_xx += vaddvq_s64(sxx);
  m.sum_yy += vaddvq_s64(syy);
  m.sum_xy += vaddvq_s64(sxy);
  return m;
}

}  // namespace invbench::simd

#endif
