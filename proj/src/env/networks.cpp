#include "invbench/env/networks.hpp"

#include <algorithm>

namespace invbench {

WarehouseState initial_warehouse(const WarehouseParams& params) {
  WarehouseState state;
  state.nodes.resize(static_cast<std::size_t>(params.mini_warehouses) + 1);
  state.nodes[0].on_hand = params.hub_initial_inventory;
  for (std::size_t w = 1; w < state.nodes.size(); ++w) state.nodes[w].on_hand = params.mini_initial_inventory;
  state.owed.assign(state.nodes.size(), 0);
  return state;
}

std::vector<NodeRecord> twn_step(WarehouseState& state, const std::vector<Action>& actions,
                                 const std::vector<std::int64_t>& demands, int period,
                                 const WarehouseParams& params) {
  const std::size_t n = state.nodes.size();
  std::vector<NodeRecord> records(n);
  auto& hub = state.nodes[0];

  const std::int64_t hub_order = actions[0].orders.at("manufacturer");
  hub.add_shipment(period, period + params.lead_manufacturer_to_hub, hub_order, "manufacturer");
  records[0].role = "hub";
  records[0].purchases["manufacturer"] = hub_order;

  for (std::size_t w = 1; w < n; ++w) {
    const std::int64_t via_hub = actions[w].orders.at("hub");
    const std::int64_t direct = actions[w].orders.at("direct");
    state.nodes[w].add_shipment(period, period + params.lead_direct, direct, "direct");
    state.owed[w] += via_hub;
    records[0].incoming += via_hub;
    auto& rec = records[w];
    rec.role = "mini" + std::to_string(w);
    rec.purchases["hub"] = via_hub;
    rec.purchases["direct"] = direct;
  }

  // Hub fills outstanding mini orders in mini order.
  for (std::size_t w = 1; w < n; ++w) {
    const std::int64_t ship = std::min(hub.on_hand, state.owed[w]);
    hub.on_hand -= ship;
    state.owed[w] -= ship;
    records[0].shipped += ship;
    state.nodes[w].add_shipment(period, period + params.lead_hub_to_mini, ship, "hub");
  }
  hub.backlog = 0;
  for (std::size_t w = 1; w < n; ++w) hub.backlog += state.owed[w];

  for (std::size_t w = 1; w < n; ++w) {
    auto& rec = records[w];
    rec.incoming = demands[w - 1];
    rec.shipped = state.nodes[w].serve(rec.incoming);
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& rec = records[i];
    rec.on_hand = state.nodes[i].on_hand;
    rec.backlog = state.nodes[i].backlog;
    rec.cost = params.holding * rec.on_hand + params.backorder * rec.backlog;
  }
  return records;
}

SupplyNetworkState initial_supply_network(const SupplyNetworkParams& params) {
  SupplyNetworkState state;
  state.retailers.resize(static_cast<std::size_t>(params.retailers));
  for (auto& r : state.retailers) r.on_hand = params.initial_inventory;
  return state;
}

std::vector<NodeRecord> scn_step(SupplyNetworkState& state, const std::vector<Action>& actions,
                                 const std::vector<std::int64_t>& demands, int period,
                                 const SupplyNetworkParams& params) {
  std::vector<NodeRecord> records(state.retailers.size());
  for (std::size_t i = 0; i < state.retailers.size(); ++i) {
    auto& node = state.retailers[i];
    auto& rec = records[i];
    const std::int64_t regular = actions[i].orders.at("regular");
    const std::int64_t expedited = actions[i].orders.at("expedited");
    node.add_shipment(period, period + params.lead_regular, regular, "regular");
    node.add_shipment(period, period + params.lead_expedited, expedited, "expedited");
    rec.role = "retailer" + std::to_string(i + 1);
    rec.purchases["regular"] = regular;
    rec.purchases["expedited"] = expedited;
    rec.incoming = demands[i];
    rec.shipped = node.serve(rec.incoming);
    rec.on_hand = node.on_hand;
    rec.backlog = node.backlog;
    rec.cost = params.holding * rec.on_hand + params.backorder * rec.backlog + params.cost_regular * regular +
               params.cost_expedited * expedited;
  }
  return records;
}

namespace {

std::vector<Sampler> node_demands(const StochasticProcess& base, const std::string& prefix, int count,
                                  std::uint64_t seed) {
  std::vector<Sampler> out;
  for (int k = 1; k <= count; ++k) {
    StochasticProcess p = base;
    p.stream_id = base.stream_id + "/" + prefix + std::to_string(k);
    out.emplace_back(std::move(p), seed);
  }
  return out;
}

// Shared bookkeeping for the two networks: per-node arrivals, last orders
// and last incoming demand.
class NetworkBase : public Environment {
 protected:
  explicit NetworkBase(const SimConfig& config)
      : horizon_(config.horizon), info_sharing_(config.info_sharing), roles_(roles_of(config.params)) {
    last_order_.assign(roles_.size(), 0);
    last_incoming_.resize(roles_.size());
  }

  const std::vector<RoleInfo>& roles() const override { return roles_; }

  void receive_all(std::vector<EchelonState>& nodes, int period) {
    period_ = period;
    on_hand_begin_.clear();
    received_.clear();
    for (auto& e : nodes) {
      on_hand_begin_.push_back(e.on_hand);
      received_.push_back(e.receive(period));
    }
  }

  std::vector<PartnerView> partners(const std::vector<EchelonState>& nodes) const {
    std::vector<PartnerView> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
      out.push_back({&roles_[i], nodes[i].on_hand, nodes[i].backlog, last_order_[i]});
    return out;
  }

  void record(StepRecord& step, const std::vector<Action>& actions) {
    for (std::size_t i = 0; i < roles_.size(); ++i) {
      step.nodes[i].on_hand_begin = on_hand_begin_[i];
      step.nodes[i].received = received_[i];
      last_order_[i] = actions[i].total();
      last_incoming_[i] = step.nodes[i].incoming;
    }
  }

  static std::vector<Action> unwrap(const std::vector<std::optional<Action>>& actions) {
    std::vector<Action> out;
    for (const auto& a : actions) out.push_back(*a);
    return out;
  }

  int horizon_;
  bool info_sharing_;
  std::vector<RoleInfo> roles_;
  int period_ = 0;
  std::vector<std::int64_t> last_order_;
  std::vector<std::optional<std::int64_t>> last_incoming_;
  std::vector<std::int64_t> on_hand_begin_;
  std::vector<std::map<std::string, std::int64_t>> received_;
};

class WarehouseNetwork final : public NetworkBase {
 public:
  explicit WarehouseNetwork(const SimConfig& config)
      : NetworkBase(config),
        params_(std::get<WarehouseParams>(config.params)),
        demands_(node_demands(params_.demand, "mini", params_.mini_warehouses, config.seed)),
        state_(initial_warehouse(params_)) {}

  EnvId id() const override { return EnvId::twn; }

  void begin_period(int period) override { receive_all(state_.nodes, period); }

  Observation observe(std::size_t role) const override {
    const auto& e = state_.nodes[role];
    const std::int64_t owed = role == 0 ? 0 : state_.owed[role];
    Observation obs = build_observation(EnvId::twn, period_, horizon_, roles_[role], e.on_hand, e.backlog, e.pipeline,
                                        owed, last_incoming_[role], partners(state_.nodes), info_sharing_);
    obs.costs["holding"] = params_.holding;
    obs.costs["backorder"] = params_.backorder;
    if (role == 0) {
      obs.lead_times["manufacturer"] = params_.lead_manufacturer_to_hub;
    } else {
      obs.lead_times["hub"] = params_.lead_hub_to_mini;
      obs.lead_times["direct"] = params_.lead_direct;
      obs.demand_process = params_.demand;
    }
    return obs;
  }

  StepRecord finish_period(const std::vector<std::optional<Action>>& actions) override {
    const auto acts = unwrap(actions);
    std::vector<std::int64_t> d;
    for (auto& s : demands_) d.push_back(s.next());
    StepRecord step;
    step.period = period_;
    for (std::size_t w = 0; w < d.size(); ++w) step.demand[roles_[w + 1].name] = d[w];
    step.nodes = twn_step(state_, acts, d, period_, params_);
    step.placements.push_back({"hub", "manufacturer", acts[0].orders.at("manufacturer"), period_,
                               period_ + params_.lead_manufacturer_to_hub, std::nullopt});
    for (std::size_t w = 1; w < acts.size(); ++w) {
      step.placements.push_back({roles_[w].name, "direct", acts[w].orders.at("direct"), period_,
                                 period_ + params_.lead_direct, std::nullopt});
      step.placements.push_back({roles_[w].name, "hub", acts[w].orders.at("hub"), period_, std::nullopt, std::nullopt});
    }
    record(step, acts);
    return step;
  }

  std::vector<NodeSnapshot> snapshot() const override {
    std::vector<NodeSnapshot> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
      out.push_back({roles_[i].name, state_.nodes[i].on_hand, state_.nodes[i].backlog, state_.nodes[i].pipeline});
    return out;
  }

 private:
  WarehouseParams params_;
  std::vector<Sampler> demands_;
  WarehouseState state_;
};

class SupplyNetwork final : public NetworkBase {
 public:
  explicit SupplyNetwork(const SimConfig& config)
      : NetworkBase(config),
        params_(std::get<SupplyNetworkParams>(config.params)),
        demands_(node_demands(params_.demand, "retailer", params_.retailers, config.seed)),
        state_(initial_supply_network(params_)) {}

  EnvId id() const override { return EnvId::scn; }

  void begin_period(int period) override { receive_all(state_.retailers, period); }

  Observation observe(std::size_t role) const override {
    const auto& e = state_.retailers[role];
    Observation obs = build_observation(EnvId::scn, period_, horizon_, roles_[role], e.on_hand, e.backlog, e.pipeline,
                                        0, last_incoming_[role], partners(state_.retailers), info_sharing_);
    obs.costs["holding"] = params_.holding;
    obs.costs["backorder"] = params_.backorder;
    obs.costs["regular"] = params_.cost_regular;
    obs.costs["expedited"] = params_.cost_expedited;
    obs.lead_times["regular"] = params_.lead_regular;
    obs.lead_times["expedited"] = params_.lead_expedited;
    obs.demand_process = params_.demand;
    return obs;
  }

  StepRecord finish_period(const std::vector<std::optional<Action>>& actions) override {
    const auto acts = unwrap(actions);
    std::vector<std::int64_t> d;
    for (auto& s : demands_) d.push_back(s.next());
    StepRecord step;
    step.period = period_;
    for (std::size_t i = 0; i < d.size(); ++i) step.demand[roles_[i].name] = d[i];
    step.nodes = scn_step(state_, acts, d, period_, params_);
    for (std::size_t i = 0; i < acts.size(); ++i) {
      step.placements.push_back({roles_[i].name, "regular", acts[i].orders.at("regular"), period_,
                                 period_ + params_.lead_regular, std::nullopt});
      step.placements.push_back({roles_[i].name, "expedited", acts[i].orders.at("expedited"), period_,
                                 period_ + params_.lead_expedited, std::nullopt});
    }
    record(step, acts);
    return step;
  }

  std::vector<NodeSnapshot> snapshot() const override {
    std::vector<NodeSnapshot> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
      out.push_back({roles_[i].name, state_.retailers[i].on_hand, state_.retailers[i].backlog,
                     state_.retailers[i].pipeline});
    return out;
  }

 private:
  SupplyNetworkParams params_;
  std::vector<Sampler> demands_;
  SupplyNetworkState state_;
};

}  // namespace

std::unique_ptr<Environment> make_warehouse_network(const SimConfig& config) {
  return std::make_unique<WarehouseNetwork>(config);
}

std::unique_ptr<Environment> make_supply_network(const SimConfig& config) {
  return std::make_unique<SupplyNetwork>(config);
}

}  // namespace invbench
