#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/agents/external.hpp"
#include "invbench/core/episode.hpp"

namespace invbench {

enum class AgentKind {
  optimal_nvp,
  expost_replay,
  base_stock,
  order_up_to,
  mean_anchored,
  demand_chaser,
  constant,
  random,
  external,
};

std::string_view to_string(AgentKind kind);
AgentKind agent_kind_from_string(std::string_view name);

struct ExternalEndpoint {
  std::vector<std::string> command;  // subprocess argv
  std::string url;                   // or an http:// endpoint
  std::chrono::milliseconds timeout{120'000};
  bool operator==(const ExternalEndpoint&) const = default;
};

struct AgentSpec {
  AgentKind kind = AgentKind::constant;
  std::int64_t level = 0;        // base_stock S
  std::int64_t safety = 0;       // order_up_to
  double alpha0 = 0.0;           // mean_anchored, in [0, 1.5]
  std::int64_t quantity = 0;     // constant
  std::int64_t low = 0;          // random
  std::int64_t high = 0;
  std::vector<std::int64_t> orders;  // expost_replay; empty means compute
  std::optional<ExternalEndpoint> endpoint;
  bool operator==(const AgentSpec&) const = default;
};

// Appends every parameter problem to `problems`.
void validate(const AgentSpec& spec, std::vector<std::string>& problems);
// Also checks that the kind fits the environment.
void validate(const AgentSpec& spec, EnvId env, std::vector<std::string>& problems);

// {"kind": "base_stock", "S": 20}, {"kind": "mean_anchored", "alpha0": 0.5},
// {"kind": "external", "command": [...]} ... Throws ConfigError.
AgentSpec agent_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AgentSpec& spec);

struct AgentBinding {
  SimConfig config;
  std::string framing = "none";
  bool cognitive_reflection = false;
};

// Throws ConfigError on invalid parameters.
std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const AgentBinding& binding);

}  // namespace invbench
