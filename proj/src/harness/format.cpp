#include "invbench/harness/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace invbench {

std::string format_number(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_number: non-finite value");
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, end);
}

std::string format_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace invbench
