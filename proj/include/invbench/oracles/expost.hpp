#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invbench/core/fixed.hpp"
#include "invbench/env/multi_period.hpp"

namespace invbench {

struct ExPostSolution {
  std::vector<std::int64_t> orders;  // a*_m
  // Last period covered by order m; empty when the order should cover
  // nothing (no periods before the next arrival, or b = 0).
  std::vector<std::optional<int>> replenishment_periods;
  Fixed total_cost;
};

// Last period worth covering with an order arriving at `arrival` when the
// next order arrives at `next_arrival`. Inside the window, period
// arrival + k - 1 is worth covering while k <= ceil(b n / (h + b)), n the
// window length, which gives next_arrival - 1 - floor(h n / (h + b)).
// Returns arrival - 1 when nothing is worth covering.
int optimal_replenishment_period(int arrival, int next_arrival, Fixed holding, Fixed backorder);

// Total holding/backorder cost of an order vector on a realized episode.
Fixed mpr_total_cost(const MprRealization& realization, std::span<const std::int64_t> orders);

// Ex-post optimal orders by window decomposition. Orders are applied in
// sequence, so the inventory position at v_m includes every earlier optimal
// order. Throws std::invalid_argument on crossing arrivals.
ExPostSolution expost_optimal(const MprRealization& realization);

struct DpSolution {
  std::vector<std::int64_t> orders;
  Fixed cost;
};

// Validator: dynamic program over (period, inventory level) that tries every
// order quantity 0..quantity_cap for each slot and charges the per-period
// cost directly. Rejects more than 4 slots or quantity_cap > 200.
DpSolution brute_force_dp(const MprRealization& realization, std::int64_t quantity_cap);

// Euclidean distance between an order vector and the optimal one.
double distance_to_optimal(std::span<const std::int64_t> orders, std::span<const std::int64_t> optimal);
double distance_to_optimal(std::span<const double> orders, std::span<const double> optimal);

}  // namespace invbench
