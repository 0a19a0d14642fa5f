#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/agents/agent_spec.hpp"
#include "invbench/core/episode.hpp"

namespace invbench {

struct ExperimentConfig {
  std::string label;
  EnvId env = EnvId::nvp;
  int horizon = 20;
  int memory_window = 5;
  EnvParams params = NvpParams{};
  // Keyed by role; "*" applies to every role without its own entry.
  std::map<std::string, AgentSpec> agents;
  std::vector<std::uint64_t> seeds;
  std::string framing = "none";  // "PF", "NF" or "none"; NVP only
  bool info_sharing = false;     // multi-agent environments only
  bool cognitive_reflection = false;
  std::string output_dir = "out";
  int workers = 1;
};

// Parses and validates, collecting every problem into one ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& file);

// Fully resolved form, every default spelled out.
nlohmann::json to_json(const ExperimentConfig& c);

// Throws ConfigError listing every problem.
void validate(const ExperimentConfig& c);

// Agent spec bound to each role, in role order. Throws ConfigError when a
// role has no spec.
std::vector<std::pair<std::string, AgentSpec>> resolve_roster(const ExperimentConfig& c);

SimConfig sim_config(const ExperimentConfig& c, std::uint64_t seed);

// Short text naming the agents, e.g. "base_stock(S=20)".
std::string describe(const AgentSpec& spec);
std::string describe_roster(const ExperimentConfig& c);

}  // namespace invbench
