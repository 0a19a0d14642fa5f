#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace invbench {

// Fixed-point decimal with four fractional digits. Costs and prices are kept
// in this form so per-period sums are exact and logs can be re-verified
// bit-for-bit.
class Fixed {
 public:
  static constexpr std::int64_t kScale = 10'000;

  constexpr Fixed() = default;

  static constexpr Fixed from_raw(std::int64_t raw) {
    Fixed f;
    f.raw_ = raw;
    return f;
  }
  static constexpr Fixed from_int(std::int64_t units) { return from_raw(units * kScale); }

  // Throws std::invalid_argument if |value| has more than four decimals.
  static Fixed from_double(double value);

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / static_cast<double>(kScale); }

  // Shortest decimal form: "12", "0.5", "-3.25".
  std::string to_string() const;

  constexpr Fixed operator+(Fixed o) const { return from_raw(raw_ + o.raw_); }
  constexpr Fixed operator-(Fixed o) const { return from_raw(raw_ - o.raw_); }
  constexpr Fixed operator-() const { return from_raw(-raw_); }
  constexpr Fixed operator*(std::int64_t units) const { return from_raw(raw_ * units); }
  constexpr Fixed& operator+=(Fixed o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr Fixed& operator-=(Fixed o) {
    raw_ -= o.raw_;
    return *this;
  }

  constexpr auto operator<=>(const Fixed&) const = default;

 private:
  std::int64_t raw_ = 0;
};

constexpr Fixed operator*(std::int64_t units, Fixed f) { return f * units; }

}  // namespace invbench
