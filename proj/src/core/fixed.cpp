#include "invbench/core/fixed.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace invbench {

Fixed Fixed::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite decimal value");
  const double scaled = value * static_cast<double>(kScale);
  const double rounded = std::round(scaled);
  if (std::fabs(scaled - rounded) > 1e-6 || std::fabs(rounded) > 9e15) {
    throw std::invalid_argument("value " + std::to_string(value) + " needs more than four decimals");
  }
  return from_raw(static_cast<std::int64_t>(rounded));
}

std::string Fixed::to_string() const {
  const bool negative = raw_ < 0;
  const std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(raw_) : static_cast<std::uint64_t>(raw_);
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / kScale);
  std::uint64_t frac = mag % kScale;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 4 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace invbench
