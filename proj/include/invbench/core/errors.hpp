#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invbench {

// Invalid configuration or parameters. Raised before any period is simulated.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
  explicit ConfigError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

enum class ProtocolErrc {
  timeout = 10,
  malformed_json = 11,
  schema_violation = 12,
  stream_closed = 13,
  version_mismatch = 14,
  invalid_action = 15,
  transport_failure = 16,
};

std::string_view to_string(ProtocolErrc code);

// Failure talking to an agent: late, garbled or illegal replies.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(ProtocolErrc code, const std::string& detail);

  ProtocolErrc code() const { return code_; }

 private:
  ProtocolErrc code_;
};

// An episode stopped because an agent misbehaved. Carries the period and role.
class EpisodeAborted : public std::runtime_error {
 public:
  EpisodeAborted(int period, std::string role, ProtocolErrc code, const std::string& detail);

  int period() const { return period_; }
  const std::string& role() const { return role_; }
  ProtocolErrc code() const { return code_; }

 private:
  int period_;
  std::string role_;
  ProtocolErrc code_;
};

}  // namespace invbench
