#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "invbench/env/echelon.hpp"
#include "invbench/env/environment.hpp"

namespace invbench {

// Two-level warehouse network: node 0 is the central hub, nodes 1..W the
// mini-warehouses. `owed[w]` is what the hub still has to ship to mini w.
struct WarehouseState {
  std::vector<EchelonState> nodes;
  std::vector<std::int64_t> owed;
};

WarehouseState initial_warehouse(const WarehouseParams& params);

// One period after arrivals. actions[0] has channel "manufacturer";
// actions[w] has channels "hub" and "direct". demands[w-1] is mini w's
// customer demand. The hub fills mini orders in mini order.
std::vector<NodeRecord> twn_step(WarehouseState& state, const std::vector<Action>& actions,
                                 const std::vector<std::int64_t>& demands, int period,
                                 const WarehouseParams& params);

// Retailers with a regular and an expedited supplier, both unconstrained.
struct SupplyNetworkState {
  std::vector<EchelonState> retailers;
};

SupplyNetworkState initial_supply_network(const SupplyNetworkParams& params);

std::vector<NodeRecord> scn_step(SupplyNetworkState& state, const std::vector<Action>& actions,
                                 const std::vector<std::int64_t>& demands, int period,
                                 const SupplyNetworkParams& params);

std::unique_ptr<Environment> make_warehouse_network(const SimConfig& config);
std::unique_ptr<Environment> make_supply_network(const SimConfig& config);

}  // namespace invbench
