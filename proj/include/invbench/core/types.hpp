#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invbench/core/fixed.hpp"
#include "invbench/core/stochastic.hpp"

namespace invbench {

enum class EnvId { nvp, mpr, bg, twn, scn };

std::string_view to_string(EnvId id);
// Accepts "NVP", "nvp", ... Throws ConfigError on unknown names.
EnvId env_id_from_string(std::string_view name);

struct PipelineEntry {
  int arrival_period = 0;
  std::int64_t quantity = 0;
  std::string channel;
  bool operator==(const PipelineEntry&) const = default;
};

// What an agent sees of a partner when information sharing is on.
struct PartnerState {
  std::string role;
  std::int64_t on_hand = 0;
  std::int64_t backlog = 0;
  std::int64_t last_order = 0;
  bool operator==(const PartnerState&) const = default;
};

struct Observation {
  EnvId env = EnvId::nvp;
  int period = 1;
  int horizon = 1;
  std::string role;
  std::vector<std::string> channels;

  std::int64_t on_hand = 0;
  std::int64_t backlog = 0;
  std::vector<PipelineEntry> pipeline;
  // Ordered but not yet received: in transit plus whatever the supplier owes.
  std::int64_t outstanding = 0;
  // Customer demand or downstream order received last period.
  std::optional<std::int64_t> last_demand;
  // Recent demand realizations, newest last (newsvendor only).
  std::vector<std::int64_t> demand_history;

  std::map<std::string, Fixed> costs;
  std::map<std::string, int> lead_times;
  std::optional<StochasticProcess> demand_process;
  std::optional<StochasticProcess> lead_time_process;

  std::optional<std::vector<PartnerState>> partners;

  std::int64_t inventory_position() const { return on_hand - backlog + outstanding; }

  bool operator==(const Observation&) const = default;
};

struct Action {
  std::map<std::string, std::int64_t> orders;

  std::int64_t total() const;
  bool operator==(const Action&) const = default;
};

Action single_order(const std::string& channel, std::int64_t quantity);

}  // namespace invbench
