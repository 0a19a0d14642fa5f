#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "invbench/env/echelon.hpp"
#include "invbench/env/environment.hpp"

namespace invbench {

// Echelon 0 is the retailer, 3 the plant. The plant's supplier is an
// exogenous manufacturer that always ships in full.
struct BeerGameState {
  std::vector<EchelonState> echelons;
};

BeerGameState initial_beer_game(const BeerGameParams& params);

// Runs the order/ship/cost part of one period (arrivals already received).
// orders[i] is echelon i's order to its supplier. Returns one record per
// echelon; `received` and `on_hand_begin` are left for the caller.
std::vector<NodeRecord> bg_step(BeerGameState& state, const std::vector<std::int64_t>& orders,
                                std::int64_t customer_demand, int period, const BeerGameParams& params);

std::unique_ptr<Environment> make_beer_game(const SimConfig& config);

}  // namespace invbench
