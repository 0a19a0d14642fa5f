#include "invbench/core/errors.hpp"

namespace invbench {

namespace {

std::string join(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) out += "\n  - " + p;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

std::string_view to_string(ProtocolErrc code) {
  switch (code) {
    case ProtocolErrc::timeout: return "timeout";
    case ProtocolErrc::malformed_json: return "malformed_json";
    case ProtocolErrc::schema_violation: return "schema_violation";
    case ProtocolErrc::stream_closed: return "stream_closed";
    case ProtocolErrc::version_mismatch: return "version_mismatch";
    case ProtocolErrc::invalid_action: return "invalid_action";
    case ProtocolErrc::transport_failure: return "transport_failure";
  }
  return "unknown";
}

ProtocolError::ProtocolError(ProtocolErrc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

EpisodeAborted::EpisodeAborted(int period, std::string role, ProtocolErrc code, const std::string& detail)
    : std::runtime_error("episode aborted at period " + std::to_string(period) + ", agent '" + role +
                         "' [" + std::string(to_string(code)) + "]: " + detail),
      period_(period),
      role_(std::move(role)),
      code_(code) {}

}  // namespace invbench
