#include "invbench/env/newsvendor.hpp"

#include <algorithm>
#include <deque>

namespace invbench {

NodeRecord nvp_step(std::int64_t order, std::int64_t demand, const NvpParams& params) {
  NodeRecord rec;
  rec.role = "newsvendor";
  rec.received["order"] = order;
  rec.purchases["order"] = order;
  rec.incoming = demand;
  rec.shipped = std::min(order, demand);
  rec.on_hand = std::max<std::int64_t>(order - demand, 0);  // salvaged at 0
  rec.backlog = std::max<std::int64_t>(demand - order, 0);  // lost sales
  rec.profit = params.price * rec.shipped - params.cost * order;
  rec.cost = params.cost * rec.on_hand + (params.price - params.cost) * rec.backlog;
  return rec;
}

namespace {

class Newsvendor final : public Environment {
 public:
  explicit Newsvendor(const SimConfig& config)
      : params_(std::get<NvpParams>(config.params)),
        horizon_(config.horizon),
        history_cap_(static_cast<std::size_t>(config.memory_window)),
        roles_(roles_of(config.params)),
        demand_(params_.demand, config.seed) {}

  EnvId id() const override { return EnvId::nvp; }
  const std::vector<RoleInfo>& roles() const override { return roles_; }

  void begin_period(int period) override { period_ = period; }

  Observation observe(std::size_t) const override {
    Observation obs = build_observation(EnvId::nvp, period_, horizon_, roles_[0], 0, 0, {}, 0, last_demand_, {}, false);
    obs.costs["price"] = params_.price;
    obs.costs["cost"] = params_.cost;
    obs.costs["salvage"] = Fixed{};
    obs.demand_process = params_.demand;
    obs.demand_history.assign(history_.begin(), history_.end());
    return obs;
  }

  StepRecord finish_period(const std::vector<std::optional<Action>>& actions) override {
    const std::int64_t q = actions.at(0)->orders.at("order");
    const std::int64_t d = demand_.next();
    StepRecord step;
    step.period = period_;
    step.demand["newsvendor"] = d;
    step.nodes.push_back(nvp_step(q, d, params_));
    step.placements.push_back({"newsvendor", "order", q, period_, period_, std::nullopt});
    last_demand_ = d;
    if (history_cap_ > 0) {
      if (history_.size() == history_cap_) history_.pop_front();
      history_.push_back(d);
    }
    return step;
  }

  std::vector<NodeSnapshot> snapshot() const override { return {NodeSnapshot{"newsvendor", 0, 0, {}}}; }

 private:
  NvpParams params_;
  int horizon_;
  std::size_t history_cap_;
  std::vector<RoleInfo> roles_;
  Sampler demand_;
  int period_ = 0;
  std::optional<std::int64_t> last_demand_;
  std::deque<std::int64_t> history_;
};

}  // namespace

std::unique_ptr<Environment> make_newsvendor(const SimConfig& config) { return std::make_unique<Newsvendor>(config); }

}  // namespace invbench
