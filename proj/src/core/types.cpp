#include "invbench/core/types.hpp"

#include <algorithm>
#include <cctype>

#include "invbench/core/errors.hpp"

namespace invbench {

std::string_view to_string(EnvId id) {
  switch (id) {
    case EnvId::nvp: return "NVP";
    case EnvId::mpr: return "MPR";
    case EnvId::bg: return "BG";
    case EnvId::twn: return "TWN";
    case EnvId::scn: return "SCN";
  }
  return "?";
}

EnvId env_id_from_string(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (EnvId id : {EnvId::nvp, EnvId::mpr, EnvId::bg, EnvId::twn, EnvId::scn})
    if (to_string(id) == upper) return id;
  throw ConfigError("unknown environment '" + std::string(name) + "' (expected NVP, MPR, BG, TWN or SCN)");
}

std::int64_t Action::total() const {
  std::int64_t sum = 0;
  for (const auto& [_, q] : orders) sum += q;
  return sum;
}

Action single_order(const std::string& channel, std::int64_t quantity) {
  Action a;
  a.orders[channel] = quantity;
  return a;
}

}  // namespace invbench
