#include "invbench/agents/scripted.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invbench/oracles/expost.hpp"
#include "invbench/oracles/newsvendor.hpp"

namespace invbench {

namespace {

std::int64_t fallback_forecast(const Observation& obs) {
  if (obs.last_demand) return *obs.last_demand;
  if (obs.demand_process)
    if (auto mu = mean(*obs.demand_process)) return static_cast<std::int64_t>(std::llround(*mu));
  return 0;
}

const StochasticProcess& nvp_demand(const Observation& obs) {
  if (obs.env != EnvId::nvp || !obs.demand_process) throw std::logic_error("newsvendor policy bound to a non-NVP role");
  return *obs.demand_process;
}

// Floor division for a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace

const std::string& primary_channel(const std::vector<std::string>& channels) {
  if (channels.empty()) throw std::logic_error("role has no order channels");
  for (const char* preferred : {"regular", "hub"}) {
    auto it = std::find(channels.begin(), channels.end(), preferred);
    if (it != channels.end()) return *it;
  }
  return channels.front();
}

Action order_on_primary(const Observation& obs, std::int64_t quantity) {
  Action a;
  for (const auto& c : obs.channels) a.orders[c] = 0;
  a.orders[primary_channel(obs.channels)] = quantity;
  return a;
}

Action OptimalNewsvendorAgent::decide(const Observation& obs, const MemoryWindow&) {
  const auto& demand = nvp_demand(obs);
  const Fixed price = obs.costs.at("price");
  const Fixed cost = obs.costs.at("cost");
  const Fixed salvage = obs.costs.count("salvage") ? obs.costs.at("salvage") : Fixed{};
  return order_on_primary(obs, newsvendor_q_star(demand, price - cost, cost - salvage));
}

ExPostReplayAgent::ExPostReplayAgent(std::vector<std::int64_t> orders, std::optional<MprParams> params)
    : fixed_(std::move(orders)), params_(std::move(params)) {}

void ExPostReplayAgent::begin_episode(const EpisodeContext& ctx) {
  next_ = 0;
  if (!fixed_.empty() || !params_) {
    orders_ = fixed_;
    return;
  }
  orders_ = expost_optimal(realize_mpr(*params_, ctx.horizon, ctx.seed)).orders;
}

Action ExPostReplayAgent::decide(const Observation& obs, const MemoryWindow&) {
  if (next_ >= orders_.size()) throw std::logic_error("expost_replay: order list exhausted");
  return order_on_primary(obs, orders_[next_++]);
}

Action BaseStockAgent::decide(const Observation& obs, const MemoryWindow&) {
  return order_on_primary(obs, std::max<std::int64_t>(0, level_ - obs.inventory_position()));
}

Action OrderUpToAgent::decide(const Observation& obs, const MemoryWindow&) {
  const auto& channel = primary_channel(obs.channels);
  std::int64_t lead = 0;
  if (auto it = obs.lead_times.find(channel); it != obs.lead_times.end()) {
    lead = it->second;
  } else if (obs.lead_time_process) {
    if (auto m = mean(*obs.lead_time_process)) lead = static_cast<std::int64_t>(std::llround(*m));
  }
  const std::int64_t target = (lead + 1) * fallback_forecast(obs) + safety_;
  return order_on_primary(obs, std::max<std::int64_t>(0, target - obs.inventory_position()));
}

std::int64_t MeanAnchoredAgent::target_raw(const Observation& obs, double alpha0) {
  const auto& demand = nvp_demand(obs);
  auto mu = mean(demand);
  if (!mu) throw std::logic_error("mean_anchored: demand has no mean");
  const Fixed price = obs.costs.at("price");
  const Fixed cost = obs.costs.at("cost");
  const Fixed salvage = obs.costs.count("salvage") ? obs.costs.at("salvage") : Fixed{};
  const auto q_star = newsvendor_q_star(demand, price - cost, cost - salvage);
  const double mu_raw = std::round(*mu * Fixed::kScale);
  const double gap_raw = static_cast<double>(q_star) * Fixed::kScale - mu_raw;
  return static_cast<std::int64_t>(mu_raw + std::round((1.0 - alpha0) * gap_raw));
}

Action MeanAnchoredAgent::decide(const Observation& obs, const MemoryWindow&) {
  const std::int64_t target = target_raw(obs, alpha0_);
  const std::int64_t t = obs.period;
  const std::int64_t half = Fixed::kScale / 2;
  const auto cumulative = [&](std::int64_t n) { return floor_div(n * target + half, Fixed::kScale); };
  return order_on_primary(obs, std::max<std::int64_t>(0, cumulative(t) - cumulative(t - 1)));
}

Action DemandChaserAgent::decide(const Observation& obs, const MemoryWindow&) {
  return order_on_primary(obs, fallback_forecast(obs));
}

Action ConstantAgent::decide(const Observation& obs, const MemoryWindow&) { return order_on_primary(obs, quantity_); }

void RandomAgent::begin_episode(const EpisodeContext& ctx) { rng_.emplace(ctx.seed, "agent/" + ctx.role); }

Action RandomAgent::decide(const Observation& obs, const MemoryWindow&) {
  if (!rng_) throw std::logic_error("random agent used outside an episode");
  const auto span = static_cast<std::uint64_t>(high_ - low_) + 1;
  return order_on_primary(obs, low_ + static_cast<std::int64_t>(rng_->below(span)));
}

}  // namespace invbench
