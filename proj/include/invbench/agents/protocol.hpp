#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/core/fixed.hpp"
#include "invbench/core/types.hpp"

namespace invbench {

inline constexpr int kProtocolVersion = 1;

// Messages travel as one JSON object per line: {type, period, payload}.
// hello/ready carry period 0, end carries the last simulated period.

struct HelloMsg {
  int protocol_version = kProtocolVersion;
  EnvId env = EnvId::nvp;
  std::string role;
  std::vector<std::string> channels;
  int horizon = 1;
  std::string framing = "none";  // "PF", "NF" or "none"
  bool cognitive_reflection = false;
  bool info_sharing = false;
  int memory_window = 0;
  bool operator==(const HelloMsg&) const = default;
};

struct ReadyMsg {
  // Absent means the agent accepts the offered version.
  std::optional<int> protocol_version;
  bool operator==(const ReadyMsg&) const = default;
};

struct ObserveMsg {
  Observation observation;
  std::vector<std::pair<Observation, Action>> memory;
  std::string context;
  bool operator==(const ObserveMsg&) const = default;
};

struct ActMsg {
  int period = 0;
  Action action;
  bool operator==(const ActMsg&) const = default;
};

struct EndMsg {
  int period = 0;
  std::map<std::string, Fixed> totals;
  bool operator==(const EndMsg&) const = default;
};

using Message = std::variant<HelloMsg, ReadyMsg, ObserveMsg, ActMsg, EndMsg>;

std::string_view message_type(const Message& m);

// One line of JSON without the trailing newline.
std::string encode(const Message& m);

// Throws ProtocolError: malformed_json when the line is not JSON,
// schema_violation when fields are missing, mistyped or unknown.
Message decode(std::string_view line);

nlohmann::json observation_to_json(const Observation& obs);
Observation observation_from_json(const nlohmann::json& j);
nlohmann::json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j);
nlohmann::json fixed_to_json(Fixed f);

}  // namespace invbench
