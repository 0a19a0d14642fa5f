#include "invbench/core/rng.hpp"

namespace invbench {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_stream_key(std::uint64_t root_seed, std::string_view stream_id) {
  return mix64(mix64(root_seed) ^ mix64(fnv1a(stream_id) + 0x632be59bd9b4e019ULL));
}

std::uint64_t StreamRng::below(std::uint64_t bound) {
  // Lemire's multiply-and-reject.
  std::uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double StreamRng::unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

}  // namespace invbench
