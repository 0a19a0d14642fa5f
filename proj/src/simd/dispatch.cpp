#include <cstdlib>
#include <stdexcept>
#include <string>

#include "invbench/simd/moments.hpp"

namespace invbench::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("INVBENCH_SIMD"); env != nullptr && std::string(env) == "scalar")
      return Isa::scalar;
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return chosen;
}

Moments moments(std::span<const std::int32_t> x, std::span<const std::int32_t> y) { return moments(x, y, active_isa()); }

Moments moments(std::span<const std::int32_t> x, std::span<const std::int32_t> y, Isa isa) {
  if (x.size() != y.size()) throw std::invalid_argument("moments: series differ in length");
  if (!within_exact_range(x) || !within_exact_range(y)) throw std::invalid_argument("moments: input outside exact range");
  if (!isa_supported(isa)) throw std::invalid_argument("moments: " + std::string(to_string(isa)) + " not supported here");
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2: return moments_avx2(x, y);
#endif
#if defined(__aarch64__)
    case Isa::neon: return moments_neon(x, y);
#endif
    default: return moments_scalar(x, y);
  }
}

}  // namespace invbench::simd
