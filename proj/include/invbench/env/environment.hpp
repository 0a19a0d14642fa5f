#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invbench/core/episode.hpp"

namespace invbench {

struct RoleInfo {
  std::string name;
  std::vector<std::string> channels;
};

// One period is: begin_period (arrivals land), observe each deciding role,
// finish_period with the committed actions (orders, shipments, demand, cost).
class Environment {
 public:
  virtual ~Environment() = default;

  virtual EnvId id() const = 0;
  virtual const std::vector<RoleInfo>& roles() const = 0;
  virtual bool decides(std::size_t /*role*/, int /*period*/) const { return true; }

  virtual void begin_period(int period) = 0;
  virtual Observation observe(std::size_t role) const = 0;
  // actions[i] is empty exactly when role i does not decide this period.
  virtual StepRecord finish_period(const std::vector<std::optional<Action>>& actions) = 0;

  virtual std::vector<NodeSnapshot> snapshot() const = 0;
};

std::unique_ptr<Environment> make_environment(const SimConfig& config);

std::vector<RoleInfo> roles_of(const EnvParams& params);

// A partner as seen through information sharing.
struct PartnerView {
  const RoleInfo* role = nullptr;
  std::int64_t on_hand = 0;
  std::int64_t backlog = 0;
  std::int64_t last_order = 0;
};

// Common part of every observation: own inventory, pipeline and last
// incoming demand. Partner states are attached only when info_sharing is
// set; otherwise the observation holds nothing private to other roles.
Observation build_observation(EnvId env, int period, int horizon, const RoleInfo& role, std::int64_t on_hand,
                              std::int64_t backlog, const std::vector<PipelineEntry>& pipeline,
                              std::int64_t owed_by_supplier, std::optional<std::int64_t> last_demand,
                              const std::vector<PartnerView>& partners, bool info_sharing);

// Cost equation: h * on_hand + b * backlog + purchase prices.
Fixed node_cost(const NodeCostRates& rates, const NodeRecord& record);

}  // namespace invbench
