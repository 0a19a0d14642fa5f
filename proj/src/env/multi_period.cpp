#include "invbench/env/multi_period.hpp"

#include <algorithm>
#include <stdexcept>

namespace invbench {

MprStepResult mpr_step(std::int64_t level, std::int64_t arrivals, std::int64_t demand, Fixed holding,
                       Fixed backorder) {
  MprStepResult out;
  out.level = level - demand + arrivals;
  out.cost = holding * std::max<std::int64_t>(out.level, 0) + backorder * std::max<std::int64_t>(-out.level, 0);
  return out;
}

MprState place_order_mpr(MprState state, std::int64_t quantity, int period, int lead_time) {
  if (quantity < 0) throw std::invalid_argument("order quantity must be >= 0");
  if (lead_time < 1) throw std::invalid_argument("lead time must be >= 1");
  if (!std::binary_search(state.review_periods.begin(), state.review_periods.end(), period))
    throw std::invalid_argument("period " + std::to_string(period) + " is not a review period");
  int arrival = period + lead_time;
  for (const auto& e : state.pipeline) arrival = std::max(arrival, e.arrival_period);
  state.pipeline.push_back({arrival, quantity, "order"});
  return state;
}

int draw_lead_time(Sampler& sampler, int period, int previous_arrival, int max_redraws) {
  auto lead = static_cast<int>(sampler.next());
  for (int i = 0; i < max_redraws && period + lead < previous_arrival; ++i) lead = static_cast<int>(sampler.next());
  return lead;
}

namespace {

struct MprDraws {
  MprRealization realization;
  std::vector<int> lead_draws;
};

MprDraws draw_mpr(const MprParams& params, int horizon, std::uint64_t seed) {
  MprDraws out;
  auto& r = out.realization;
  r.demands = sample(params.demand, seed, static_cast<std::size_t>(horizon));
  r.order_periods = review_schedule(params, horizon);
  r.initial_inventory = params.initial_inventory;
  r.holding = params.holding;
  r.backorder = params.backorder;
  Sampler lead(params.lead_time, seed);
  int previous = 0;
  for (int t : r.order_periods) {
    const int draw = draw_lead_time(lead, t, previous);
    const int arrival = std::max(t + draw, previous);
    out.lead_draws.push_back(draw);
    r.lead_times.push_back(arrival - t);
    r.arrivals.push_back(arrival);
    previous = arrival;
  }
  return out;
}

class MultiPeriod final : public Environment {
 public:
  explicit MultiPeriod(const SimConfig& config)
      : params_(std::get<MprParams>(config.params)),
        horizon_(config.horizon),
        roles_(roles_of(config.params)),
        draws_(draw_mpr(params_, horizon_, config.seed)) {
    state_.level = params_.initial_inventory;
    state_.review_periods = draws_.realization.order_periods;
  }

  EnvId id() const override { return EnvId::mpr; }
  const std::vector<RoleInfo>& roles() const override { return roles_; }

  bool decides(std::size_t, int period) const override {
    return std::binary_search(state_.review_periods.begin(), state_.review_periods.end(), period);
  }

  void begin_period(int period) override {
    period_ = period;
    level_begin_ = state_.level;
    arrived_ = 0;
    auto due = std::stable_partition(state_.pipeline.begin(), state_.pipeline.end(),
                                     [&](const PipelineEntry& e) { return e.arrival_period != period; });
    for (auto it = due; it != state_.pipeline.end(); ++it) arrived_ += it->quantity;
    state_.pipeline.erase(due, state_.pipeline.end());
  }

  Observation observe(std::size_t) const override {
    // Arrivals of this period are already usable.
    const std::int64_t available = level_begin_ + arrived_;
    Observation obs = build_observation(EnvId::mpr, period_, horizon_, roles_[0], std::max<std::int64_t>(available, 0),
                                        std::max<std::int64_t>(-available, 0), state_.pipeline, 0, last_demand_, {},
                                        false);
    obs.costs["holding"] = params_.holding;
    obs.costs["backorder"] = params_.backorder;
    obs.demand_process = params_.demand;
    obs.lead_time_process = params_.lead_time;
    return obs;
  }

  StepRecord finish_period(const std::vector<std::optional<Action>>& actions) override {
    StepRecord step;
    step.period = period_;
    NodeRecord rec;
    rec.role = roles_[0].name;
    if (actions.at(0)) {
      const std::int64_t q = actions[0]->orders.at("order");
      const auto m = static_cast<std::size_t>(next_slot_++);
      state_ = place_order_mpr(std::move(state_), q, period_, draws_.lead_draws.at(m));
      const int arrival = state_.pipeline.back().arrival_period;
      if (arrival != draws_.realization.arrivals[m]) throw std::logic_error("MPR realization drifted");
      step.placements.push_back({rec.role, "order", q, period_, arrival, static_cast<int>(m) + 1});
      rec.purchases["order"] = q;
    }
    const std::int64_t d = draws_.realization.demands.at(static_cast<std::size_t>(period_ - 1));
    const auto result = mpr_step(level_begin_, arrived_, d, params_.holding, params_.backorder);

    const std::int64_t available = std::max<std::int64_t>(level_begin_, 0) + arrived_;
    const std::int64_t owed = std::max<std::int64_t>(-level_begin_, 0) + d;
    rec.on_hand_begin = std::max<std::int64_t>(level_begin_, 0);
    rec.received["order"] = arrived_;
    rec.incoming = d;
    rec.shipped = std::min(available, owed);
    rec.on_hand = std::max<std::int64_t>(result.level, 0);
    rec.backlog = std::max<std::int64_t>(-result.level, 0);
    rec.cost = result.cost;
    state_.level = result.level;
    last_demand_ = d;
    step.demand[rec.role] = d;
    step.nodes.push_back(std::move(rec));
    return step;
  }

  std::vector<NodeSnapshot> snapshot() const override {
    return {NodeSnapshot{roles_[0].name, std::max<std::int64_t>(state_.level, 0),
                         std::max<std::int64_t>(-state_.level, 0), state_.pipeline}};
  }

 private:
  MprParams params_;
  int horizon_;
  std::vector<RoleInfo> roles_;
  MprDraws draws_;
  MprState state_;
  int period_ = 0;
  int next_slot_ = 0;
  std::int64_t level_begin_ = 0;
  std::int64_t arrived_ = 0;
  std::optional<std::int64_t> last_demand_;
};

}  // namespace

MprRealization realize_mpr(const MprParams& params, int horizon, std::uint64_t seed) {
  return draw_mpr(params, horizon, seed).realization;
}

std::unique_ptr<Environment> make_multi_period(const SimConfig& config) {
  return std::make_unique<MultiPeriod>(config);
}

}  // namespace invbench
