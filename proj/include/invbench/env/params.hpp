#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/core/fixed.hpp"
#include "invbench/core/stochastic.hpp"
#include "invbench/core/types.hpp"

namespace invbench {

// Defaults below are toolkit conventions; every one of them can be
// overridden from the experiment config.

struct NvpParams {
  StochasticProcess demand = make_demand(UniformInt{0, 300});
  Fixed price = Fixed::from_int(12);  // unit revenue r
  Fixed cost = Fixed::from_int(3);    // unit purchase cost c; salvage is 0
  bool operator==(const NvpParams&) const = default;
};

struct MprParams {
  StochasticProcess demand = make_demand(Poisson{10.0});
  StochasticProcess lead_time = make_lead_time(UniformInt{1, 4});
  Fixed holding = Fixed::from_int(1);
  Fixed backorder = Fixed::from_int(9);
  // Explicit order schedule; when empty, orders are due every
  // `review_interval` periods starting at `first_review`.
  std::vector<int> review_periods;
  int review_interval = 2;
  int first_review = 1;
  std::int64_t initial_inventory = 20;
  bool operator==(const MprParams&) const = default;
};

struct BeerGameParams {
  static constexpr std::size_t kEchelons = 4;  // retailer, wholesaler, distributor, plant
  StochasticProcess demand = make_demand(Trace{{4, 4, 4, 4, 8}});
  int lead_time = 2;
  std::vector<Fixed> holding = std::vector<Fixed>(kEchelons, Fixed::from_raw(5'000));
  std::vector<Fixed> backorder = std::vector<Fixed>(kEchelons, Fixed::from_int(1));
  std::vector<std::int64_t> initial_inventory = std::vector<std::int64_t>(kEchelons, 12);
  // Quantity already in transit into each echelon for each of the next
  // `lead_time` periods.
  std::int64_t initial_pipeline = 4;
  bool operator==(const BeerGameParams&) const = default;
};

struct WarehouseParams {
  int mini_warehouses = 3;
  int lead_manufacturer_to_hub = 4;
  int lead_hub_to_mini = 1;
  int lead_direct = 2;
  StochasticProcess demand = make_demand(Poisson{10.0});
  Fixed holding = Fixed::from_int(1);
  Fixed backorder = Fixed::from_int(9);
  std::int64_t hub_initial_inventory = 60;
  std::int64_t mini_initial_inventory = 20;
  bool operator==(const WarehouseParams&) const = default;
};

struct SupplyNetworkParams {
  int retailers = 2;
  int lead_regular = 4;
  int lead_expedited = 1;
  Fixed cost_regular = Fixed::from_int(1);
  Fixed cost_expedited = Fixed::from_int(2);
  StochasticProcess demand = make_demand(Poisson{10.0});
  Fixed holding = Fixed::from_int(1);
  Fixed backorder = Fixed::from_int(9);
  std::int64_t initial_inventory = 20;
  bool operator==(const SupplyNetworkParams&) const = default;
};

// Alternative order follows EnvId.
using EnvParams = std::variant<NvpParams, MprParams, BeerGameParams, WarehouseParams, SupplyNetworkParams>;

inline EnvId env_of(const EnvParams& p) { return static_cast<EnvId>(p.index()); }

EnvParams default_params(EnvId id);

// Collects every parameter problem into `problems`.
void validate(const EnvParams& params, std::vector<std::string>& problems);

// Explicit schedule of MPR order periods within [1, horizon].
std::vector<int> review_schedule(const MprParams& params, int horizon);

// Unit cost rates of one node: h per unit on hand, b per unit backlogged,
// plus a purchase price per ordered unit on each priced channel.
struct NodeCostRates {
  Fixed holding;
  Fixed backorder;
  std::map<std::string, Fixed> purchase;
};

NodeCostRates cost_rates(const EnvParams& params, std::size_t role);

// JSON forms. Missing fields fall back to defaults.
void to_json(nlohmann::json& j, const StochasticProcess& p);
StochasticProcess process_from_json(const nlohmann::json& j, std::string stream_id, std::int64_t minimum);

nlohmann::json params_to_json(const EnvParams& params);
EnvParams params_from_json(EnvId id, const nlohmann::json& j);

}  // namespace invbench
