#include "invbench/env/beer_game.hpp"

namespace invbench {

BeerGameState initial_beer_game(const BeerGameParams& params) {
  BeerGameState state;
  state.echelons.resize(BeerGameParams::kEchelons);
  for (std::size_t i = 0; i < state.echelons.size(); ++i) {
    auto& e = state.echelons[i];
    e.on_hand = params.initial_inventory[i];
    for (int k = 1; k <= params.lead_time; ++k) e.pipeline.push_back({k, params.initial_pipeline, "upstream"});
  }
  return state;
}

std::vector<NodeRecord> bg_step(BeerGameState& state, const std::vector<std::int64_t>& orders,
                                std::int64_t customer_demand, int period, const BeerGameParams& params) {
  static constexpr const char* kNames[] = {"retailer", "wholesaler", "distributor", "plant"};
  const std::size_t n = state.echelons.size();
  std::vector<NodeRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& rec = records[i];
    auto& e = state.echelons[i];
    rec.role = kNames[i];
    // Orders are visible upstream within the period.
    rec.incoming = i == 0 ? customer_demand : orders[i - 1];
    rec.shipped = e.serve(rec.incoming);
    if (i > 0) state.echelons[i - 1].add_shipment(period, period + params.lead_time, rec.shipped, "upstream");
    rec.purchases["upstream"] = orders[i];
  }
  // The manufacturer always ships the plant's order in full.
  state.echelons[n - 1].add_shipment(period, period + params.lead_time, orders[n - 1], "upstream");
  for (std::size_t i = 0; i < n; ++i) {
    auto& rec = records[i];
    rec.on_hand = state.echelons[i].on_hand;
    rec.backlog = state.echelons[i].backlog;
    rec.cost = params.holding[i] * rec.on_hand + params.backorder[i] * rec.backlog;
  }
  return records;
}

namespace {

class BeerGame final : public Environment {
 public:
  explicit BeerGame(const SimConfig& config)
      : params_(std::get<BeerGameParams>(config.params)),
        horizon_(config.horizon),
        info_sharing_(config.info_sharing),
        roles_(roles_of(config.params)),
        demand_(params_.demand, config.seed),
        state_(initial_beer_game(params_)),
        last_order_(roles_.size(), 0),
        last_incoming_(roles_.size()) {}

  EnvId id() const override { return EnvId::bg; }
  const std::vector<RoleInfo>& roles() const override { return roles_; }

  void begin_period(int period) override {
    period_ = period;
    on_hand_begin_.clear();
    received_.clear();
    for (auto& e : state_.echelons) {
      on_hand_begin_.push_back(e.on_hand);
      received_.push_back(e.receive(period));
    }
  }

  Observation observe(std::size_t role) const override {
    std::vector<PartnerView> partners;
    for (std::size_t i = 0; i < roles_.size(); ++i)
      partners.push_back({&roles_[i], state_.echelons[i].on_hand, state_.echelons[i].backlog, last_order_[i]});
    const auto& e = state_.echelons[role];
    // What the supplier has not shipped yet is still on order.
    const std::int64_t owed = role + 1 < state_.echelons.size() ? state_.echelons[role + 1].backlog : 0;
    Observation obs = build_observation(EnvId::bg, period_, horizon_, roles_[role], e.on_hand, e.backlog, e.pipeline,
                                        owed, last_incoming_[role], partners, info_sharing_);
    obs.costs["holding"] = params_.holding[role];
    obs.costs["backorder"] = params_.backorder[role];
    obs.lead_times["upstream"] = params_.lead_time;
    return obs;
  }

  StepRecord finish_period(const std::vector<std::optional<Action>>& actions) override {
    std::vector<std::int64_t> orders;
    for (const auto& a : actions) orders.push_back(a->orders.at("upstream"));
    const std::int64_t d = demand_.next();
    StepRecord step;
    step.period = period_;
    step.demand["retailer"] = d;
    step.nodes = bg_step(state_, orders, d, period_, params_);
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      step.nodes[i].on_hand_begin = on_hand_begin_[i];
      step.nodes[i].received = received_[i];
      last_order_[i] = orders[i];
      last_incoming_[i] = step.nodes[i].incoming;
      std::optional<int> arrival;
      if (i + 1 == roles_.size()) arrival = period_ + params_.lead_time;
      step.placements.push_back({roles_[i].name, "upstream", orders[i], period_, arrival, std::nullopt});
    }
    return step;
  }

  std::vector<NodeSnapshot> snapshot() const override {
    std::vector<NodeSnapshot> out;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      const auto& e = state_.echelons[i];
      out.push_back({roles_[i].name, e.on_hand, e.backlog, e.pipeline});
    }
    return out;
  }

 private:
  BeerGameParams params_;
  int horizon_;
  bool info_sharing_;
  std::vector<RoleInfo> roles_;
  Sampler demand_;
  BeerGameState state_;
  std::vector<std::int64_t> last_order_;
  std::vector<std::optional<std::int64_t>> last_incoming_;
  int period_ = 0;
  std::vector<std::int64_t> on_hand_begin_;
  std::vector<std::map<std::string, std::int64_t>> received_;
};

}  // namespace

std::unique_ptr<Environment> make_beer_game(const SimConfig& config) { return std::make_unique<BeerGame>(config); }

}  // namespace invbench
