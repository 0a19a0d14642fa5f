#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "invbench/env/environment.hpp"

namespace invbench {

struct MprState {
  std::int64_t level = 0;  // I_t, negative when backordered
  std::vector<PipelineEntry> pipeline;
  std::vector<int> review_periods;
};

struct MprStepResult {
  std::int64_t level = 0;
  Fixed cost;
};

// I' = I - d + arrivals;  C = h [I']^+ + b [-I']^+.
MprStepResult mpr_step(std::int64_t level, std::int64_t arrivals, std::int64_t demand, Fixed holding,
                       Fixed backorder);

// Places an order at review period `period` with lead-time draw
// `lead_time`. An arrival that would overtake a pending order is lifted to
// that order's arrival. Throws std::invalid_argument off schedule or for
// lead_time < 1 or quantity < 0.
MprState place_order_mpr(MprState state, std::int64_t quantity, int period, int lead_time);

// Draws a lead time for an order placed at `period`, redrawing up to
// `max_redraws` times while the arrival would precede `previous_arrival`.
// The returned value may still cross; place_order_mpr lifts it.
int draw_lead_time(Sampler& sampler, int period, int previous_arrival, int max_redraws = 100);

// Everything random about one MPR episode. It does not depend on the
// quantities ordered.
struct MprRealization {
  std::vector<std::int64_t> demands;  // d_1..d_T
  std::vector<int> order_periods;     // t_1..t_M
  std::vector<int> lead_times;        // effective l_m after non-crossing
  std::vector<int> arrivals;          // v_m
  std::int64_t initial_inventory = 0;
  Fixed holding;
  Fixed backorder;
};

MprRealization realize_mpr(const MprParams& params, int horizon, std::uint64_t seed);

std::unique_ptr<Environment> make_multi_period(const SimConfig& config);

}  // namespace invbench
