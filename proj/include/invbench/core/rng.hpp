#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace invbench {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child key for a named stream. Distinct stream ids under one root seed give
// unrelated keys, so drawing more from one stream never shifts another.
std::uint64_t derive_stream_key(std::uint64_t root_seed, std::string_view stream_id);

// Counter-based generator: the i-th output is a pure function of (key, i).
class StreamRng {
 public:
  using result_type = std::uint64_t;

  explicit StreamRng(std::uint64_t key) : key_(key) {}
  StreamRng(std::uint64_t root_seed, std::string_view stream_id)
      : key_(derive_stream_key(root_seed, stream_id)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Unbiased integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace invbench
