#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace invbench {

// Shortest decimal that round-trips, independent of locale.
std::string format_number(double v);
// Empty for an undefined value, so absence never reads as 0.
std::string format_number(const std::optional<double>& v);

std::string csv_field(std::string_view s);

}  // namespace invbench
