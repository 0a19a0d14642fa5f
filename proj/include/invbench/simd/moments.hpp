#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace invbench::simd {

// Exact first and second moments of a pair of integer series. All sums are
// integers, so every kernel variant returns bit-identical results.
struct Moments {
  std::int64_t n = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
  std::int64_t sum_xx = 0;
  std::int64_t sum_yy = 0;
  std::int64_t sum_xy = 0;

  bool operator==(const Moments&) const = default;
};

// Inputs must satisfy |v| <= kMaxMagnitude and length <= kMaxLength so that
// no 64-bit accumulator can overflow (2^21 * 2^40 = 2^61).
inline constexpr std::int32_t kMaxMagnitude = 1 << 20;
inline constexpr std::size_t kMaxLength = std::size_t{1} << 21;

bool within_exact_range(std::span<const std::int32_t> values);

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// Kernel variants. y must have the same length as x.
Moments moments_scalar(std::span<const std::int32_t> x, std::span<const std::int32_t> y);
#if defined(__x86_64__) || defined(_M_X64)
Moments moments_avx2(std::span<const std::int32_t> x, std::span<const std::int32_t> y);
#endif
#if defined(__aarch64__)
Moments moments_neon(std::span<const std::int32_t> x, std::span<const std::int32_t> y);
#endif

// Best variant supported by this CPU. INVBENCH_SIMD=scalar forces the
// reference kernel.
Isa active_isa();
bool isa_supported(Isa isa);

// Dispatches to `isa` (defaults to active_isa()). Throws std::invalid_argument
// for length mismatch or inputs outside the exact range.
Moments moments(std::span<const std::int32_t> x, std::span<const std::int32_t> y);
Moments moments(std::span<const std::int32_t> x, std::span<const std::int32_t> y, Isa isa);

}  // namespace invbench::simd
