#include "invbench/simd/moments.hpp"

#include <cstdlib>

namespace invbench::simd {

bool within_exact_range(std::span<const std::int32_t> values) {
  if (values.size() > kMaxLength) return false;
  for (auto v : values)
    if (v > kMaxMagnitude || v < -kMaxMagnitude) return false;
  return true;
}

Moments moments_scalar(std::span<const std::int32_t> x, std::span<const std::int32_t> y) {
  Moments m;
  m.n = static_cast<std::int64_t>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t a = x[i];
    const std::int64_t b = y[i];
    m.sum_x += a;
    m.sum_y += b;
    m.sum_xx += a * a;
    m.sum_yy += b * b;
    m.sum_xy += a * b;
  }
  return m;
}

}  // namespace invbench::simd
