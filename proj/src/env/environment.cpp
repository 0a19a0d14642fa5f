#include "invbench/env/environment.hpp"

#include "invbench/core/errors.hpp"
#include "invbench/env/beer_game.hpp"
#include "invbench/env/multi_period.hpp"
#include "invbench/env/networks.hpp"
#include "invbench/env/newsvendor.hpp"

namespace invbench {

std::unique_ptr<Environment> make_environment(const SimConfig& config) {
  validate(config);
  switch (config.env) {
    case EnvId::nvp: return make_newsvendor(config);
    case EnvId::mpr: return make_multi_period(config);
    case EnvId::bg: return make_beer_game(config);
    case EnvId::twn: return make_warehouse_network(config);
    case EnvId::scn: return make_supply_network(config);
  }
  throw ConfigError("unknown environment");
}

std::vector<RoleInfo> roles_of(const EnvParams& params) {
  std::vector<RoleInfo> roles;
  switch (env_of(params)) {
    case EnvId::nvp: roles.push_back({"newsvendor", {"order"}}); break;
    case EnvId::mpr: roles.push_back({"replenisher", {"order"}}); break;
    case EnvId::bg:
      for (const char* name : {"retailer", "wholesaler", "distributor", "plant"}) roles.push_back({name, {"upstream"}});
      break;
    case EnvId::twn: {
      const auto& p = std::get<WarehouseParams>(params);
      roles.push_back({"hub", {"manufacturer"}});
      for (int w = 1; w <= p.mini_warehouses; ++w) roles.push_back({"mini" + std::to_string(w), {"direct", "hub"}});
      break;
    }
    case EnvId::scn: {
      const auto& p = std::get<SupplyNetworkParams>(params);
      for (int r = 1; r <= p.retailers; ++r)
        roles.push_back({"retailer" + std::to_string(r), {"expedited", "regular"}});
      break;
    }
  }
  return roles;
}

Observation build_observation(EnvId env, int period, int horizon, const RoleInfo& role, std::int64_t on_hand,
                              std::int64_t backlog, const std::vector<PipelineEntry>& pipeline,
                              std::int64_t owed_by_supplier, std::optional<std::int64_t> last_demand,
                              const std::vector<PartnerView>& partners, bool info_sharing) {
  Observation obs;
  obs.env = env;
  obs.period = period;
  obs.horizon = horizon;
  obs.role = role.name;
  obs.channels = role.channels;
  obs.on_hand = on_hand;
  obs.backlog = backlog;
  obs.pipeline = pipeline;
  obs.outstanding = owed_by_supplier;
  for (const auto& e : pipeline) obs.outstanding += e.quantity;
  obs.last_demand = last_demand;
  if (info_sharing) {
    std::vector<PartnerState> shared;
    for (const auto& p : partners) {
      if (p.role == &role) continue;
      shared.push_back({p.role->name, p.on_hand, p.backlog, p.last_order});
    }
    obs.partners = std::move(shared);
  }
  return obs;
}

Fixed node_cost(const NodeCostRates& rates, const NodeRecord& record) {
  Fixed cost = rates.holding * record.on_hand + rates.backorder * record.backlog;
  for (const auto& [channel, qty] : record.purchases) {
    auto it = rates.purchase.find(channel);
    if (it != rates.purchase.end()) cost += it->second * qty;
  }
  return cost;
}

}  // namespace invbench
