#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "invbench/core/rng.hpp"
#include "invbench/simd/moments.hpp"

using namespace invbench;
using namespace invbench::simd;

namespace {

// Reference sums with 128-bit accumulators, independent of every kernel.
Moments wide_reference(const std::vector<std::int32_t>& x, const std::vector<std::int32_t>& y) {
  __int128 sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += static_cast<__int128>(x[i]) * x[i];
    syy += static_cast<__int128>(y[i]) * y[i];
    sxy += static_cast<__int128>(x[i]) * y[i];
  }
  return {static_cast<std::int64_t>(x.size()), static_cast<std::int64_t>(sx), static_cast<std::int64_t>(sy),
          static_cast<std::int64_t>(sxx), static_cast<std::int64_t>(syy), static_cast<std::int64_t>(sxy)};
}

std::vector<std::int32_t> random_series(StreamRng& rng, std::size_t n, std::int32_t magnitude) {
  std::vector<std::int32_t> v(n);
  const auto span = static_cast<std::uint64_t>(2 * static_cast<std::int64_t>(magnitude) + 1);
  for (auto& x : v) x = static_cast<std::int32_t>(static_cast<std::int64_t>(rng.below(span)) - magnitude);
  return v;
}

std::vector<Isa> supported() {
  std::vector<Isa> out;
  for (auto isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("every supported kernel equals the wide reference") {
    StreamRng rng(11, "simd");
    const std::size_t lengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 1000, 4099};
    for (auto n : lengths) {
      for (std::int32_t mag : {1, 300, 65536, kMaxMagnitude}) {
        const auto x = random_series(rng, n, mag);
        const auto y = random_series(rng, n, mag);
        const auto ref = wide_reference(x, y);
        for (auto isa : supported()) {
          INFO("isa=" << to_string(isa) << " n=" << n << " mag=" << mag);
          CHECK(moments(x, y, isa) == ref);
        }
      }
    }
  }

  TEST_CASE("extreme values at the exactness bound") {
    const std::size_t n = 5000;
    std::vector<std::int32_t> hi(n, kMaxMagnitude);
    std::vector<std::int32_t> lo(n, -kMaxMagnitude);
    for (auto isa : supported()) {
      CHECK(moments(hi, lo, isa) == wide_reference(hi, lo));
      CHECK(moments(lo, lo, isa) == wide_reference(lo, lo));
    }
  }

  TEST_CASE("dispatch picks a supported kernel and honors the override") {
    const auto isa = active_isa();
    CHECK(isa_supported(isa));
    if (const char* env = std::getenv("INVBENCH_SIMD"); env != nullptr && std::string(env) == "scalar")
      CHECK(isa == Isa::scalar);
    MESSAGE("active kernel: " << to_string(isa));
  }

  TEST_CASE("bad input is rejected") {
    std::vector<std::int32_t> a = {1, 2, 3};
    std::vector<std::int32_t> b = {1, 2};
    CHECK_THROWS_AS(moments(a, b), std::invalid_argument);
    std::vector<std::int32_t> big = {kMaxMagnitude + 1, 0, 0};
    CHECK_THROWS_AS(moments(big, a), std::invalid_argument);
    CHECK_FALSE(within_exact_range(big));
    for (auto isa : {Isa::avx2, Isa::neon})
      if (!isa_supported(isa)) CHECK_THROWS_AS(moments(a, a, isa), std::invalid_argument);
  }
}
