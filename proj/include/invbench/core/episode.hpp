#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invbench/core/fixed.hpp"
#include "invbench/core/memory.hpp"
#include "invbench/core/types.hpp"
#include "invbench/env/params.hpp"

namespace invbench {

struct SimConfig {
  int horizon = 1;
  std::uint64_t seed = 0;
  EnvId env = EnvId::nvp;
  EnvParams params = NvpParams{};
  int memory_window = 0;
  bool info_sharing = false;
  bool operator==(const SimConfig&) const = default;
};

// Throws ConfigError listing every problem.
void validate(const SimConfig& config);

// One order placed during a period.
struct Placement {
  std::string role;
  std::string channel;
  std::int64_t quantity = 0;
  int placed = 0;
  // Scheduled arrival, when already known at placement time.
  std::optional<int> arrival;
  // Order slot index m (MPR).
  std::optional<int> slot;
  bool operator==(const Placement&) const = default;
};

// Per-node bookkeeping for one period. Inventory level = on_hand - backlog.
struct NodeRecord {
  std::string role;
  std::int64_t on_hand_begin = 0;             // before arrivals
  std::map<std::string, std::int64_t> received;  // arrivals by channel
  std::int64_t incoming = 0;                  // demand or downstream orders
  std::int64_t shipped = 0;                   // delivered downstream / sold
  std::int64_t on_hand = 0;                   // end of period
  std::int64_t backlog = 0;                   // end of period
  std::map<std::string, std::int64_t> purchases;  // units ordered by channel
  Fixed cost;
  std::optional<Fixed> profit;                // newsvendor only

  std::int64_t total_received() const;
  bool stockout() const { return backlog > 0; }
  bool operator==(const NodeRecord&) const = default;
};

struct StepRecord {
  int period = 0;
  // Exogenous customer demand by demand-facing role.
  std::map<std::string, std::int64_t> demand;
  std::vector<NodeRecord> nodes;
  std::map<std::string, Observation> observations;
  std::map<std::string, Action> actions;
  std::vector<Placement> placements;

  Fixed total_cost() const;
  bool operator==(const StepRecord&) const = default;
};

struct NodeSnapshot {
  std::string role;
  std::int64_t on_hand = 0;
  std::int64_t backlog = 0;
  std::vector<PipelineEntry> pipeline;
  std::int64_t in_transit() const;
  bool operator==(const NodeSnapshot&) const = default;
};

struct EpisodeLog {
  SimConfig config;
  std::vector<std::string> roles;
  std::vector<StepRecord> steps;
  std::vector<NodeSnapshot> final_state;
  std::map<std::string, Fixed> totals;

  Fixed total_cost() const;
  bool operator==(const EpisodeLog&) const = default;
};

struct EpisodeContext {
  EnvId env = EnvId::nvp;
  std::string role;
  std::vector<std::string> channels;
  int horizon = 1;
  std::uint64_t seed = 0;
  bool info_sharing = false;
};

// An agent handle. Implementations must answer every observation they get.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual void begin_episode(const EpisodeContext&) {}
  virtual Action decide(const Observation& obs, const MemoryWindow& memory) = 0;
  virtual void end_episode(const std::map<std::string, Fixed>& /*totals*/) {}
};

// Runs one episode to completion. Throws ConfigError for invalid configs
// (before period 1) and EpisodeAborted for agent protocol failures.
EpisodeLog run_episode(const SimConfig& config, std::span<Agent* const> agents);

// Checks that every logged cost matches the cost equation applied to the
// logged node state. Returns a description of each mismatch.
std::vector<std::string> verify_costs(const EpisodeLog& log);

}  // namespace invbench
