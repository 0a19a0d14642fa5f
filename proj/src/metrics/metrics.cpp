#include "invbench/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invbench/oracles/expost.hpp"
#include "invbench/oracles/newsvendor.hpp"
#include "invbench/simd/moments.hpp"

namespace invbench {

namespace {

// Centered second moments scaled by n^2 (n * sum_xx - sum_x^2 etc.),
// computed exactly when the series fit the integer kernels.
struct Spread {
  long double var_x = 0;
  long double var_y = 0;
  long double cov = 0;
  bool exact_equal_var = false;
  bool exact_opposite = false;
};

std::optional<std::vector<std::int32_t>> narrow(std::span<const std::int64_t> values) {
  std::vector<std::int32_t> out;
  out.reserve(values.size());
  for (auto v : values) {
    if (v > simd::kMaxMagnitude || v < -simd::kMaxMagnitude) return std::nullopt;
    out.push_back(static_cast<std::int32_t>(v));
  }
  if (out.size() > simd::kMaxLength) return std::nullopt;
  return out;
}

Spread spread(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  Spread s;
  auto nx = narrow(x);
  auto ny = narrow(y);
  if (nx && ny) {
    const auto m = simd::moments(*nx, *ny);
    const __int128 n = m.n;
    const __int128 vx = n * m.sum_xx - static_cast<__int128>(m.sum_x) * m.sum_x;
    const __int128 vy = n * m.sum_yy - static_cast<__int128>(m.sum_y) * m.sum_y;
    const __int128 c = n * m.sum_xy - static_cast<__int128>(m.sum_x) * m.sum_y;
    s.var_x = static_cast<long double>(vx);
    s.var_y = static_cast<long double>(vy);
    s.cov = static_cast<long double>(c);
    s.exact_equal_var = vx == vy;
    return s;
  }
  // Two-pass fallback for values beyond the exact kernel range.
  const auto n = static_cast<long double>(x.size());
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += static_cast<long double>(x[i]);
    my += static_cast<long double>(y[i]);
  }
  mx /= n;
  my /= n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double dx = static_cast<long double>(x[i]) - mx;
    const long double dy = static_cast<long double>(y[i]) - my;
    s.var_x += dx * dx;
    s.var_y += dy * dy;
    s.cov += dx * dy;
  }
  s.var_x *= n;
  s.var_y *= n;
  s.cov *= n;
  return s;
}

}  // namespace

std::optional<double> population_std(std::span<const std::int64_t> values) {
  if (values.empty()) return std::nullopt;
  const auto s = spread(values, values);
  const long double n = static_cast<long double>(values.size());
  return static_cast<double>(std::sqrt(std::max<long double>(s.var_x, 0)) / n);
}

std::optional<double> pearson(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: series differ in length");
  if (x.size() < 2) return std::nullopt;
  const auto s = spread(x, y);
  if (s.var_x <= 0 || s.var_y <= 0) return std::nullopt;
  // sqrt(v) * sqrt(v) may differ from v in the last bit; keep +-1 exact.
  const long double denom = s.exact_equal_var ? s.var_x : std::sqrt(s.var_x) * std::sqrt(s.var_y);
  return std::clamp(static_cast<double>(s.cov / denom), -1.0, 1.0);
}

std::optional<double> anchoring_alpha(std::span<const double> orders, double mean_demand, double optimal_order) {
  if (orders.empty()) throw std::invalid_argument("anchoring_alpha: no orders");
  if (optimal_order == mean_demand) return std::nullopt;
  const double gap = optimal_order - mean_demand;
  double sum = 0.0;
  for (double q : orders) sum += (q - mean_demand) / gap;
  return 1.0 - sum / static_cast<double>(orders.size());
}

std::optional<double> demand_chasing_rho(std::span<const std::int64_t> orders, std::span<const std::int64_t> demands) {
  if (orders.size() != demands.size()) throw std::invalid_argument("demand_chasing_rho: series differ in length");
  if (orders.size() < 3) throw std::invalid_argument("demand_chasing_rho: needs at least 3 periods");
  return pearson(orders.subspan(1), demands.first(demands.size() - 1));
}

BullwhipResult bullwhip(const std::vector<std::vector<std::int64_t>>& orders_by_echelon,
                        std::span<const std::int64_t> customer_demand) {
  if (customer_demand.size() < 2) throw std::invalid_argument("bullwhip: needs at least 2 periods");
  for (const auto& s : orders_by_echelon)
    if (s.size() != customer_demand.size()) throw std::invalid_argument("bullwhip: series are not aligned");

  auto ratio = [](std::span<const std::int64_t> up, std::span<const std::int64_t> down) -> std::optional<double> {
    const auto su = spread(up, up);
    const auto sd = spread(down, down);
    if (sd.var_x <= 0) return std::nullopt;
    // Both variances carry the same n^2 scale.
    return static_cast<double>(std::sqrt(std::max<long double>(su.var_x, 0)) / std::sqrt(sd.var_x));
  };

  BullwhipResult out;
  std::span<const std::int64_t> down = customer_demand;
  for (const auto& series : orders_by_echelon) {
    out.per_link.push_back(ratio(series, down));
    down = series;
  }
  if (!orders_by_echelon.empty()) out.end_to_end = ratio(orders_by_echelon.back(), customer_demand);
  return out;
}

double avg_cost(std::span<const Fixed> period_costs) {
  if (period_costs.empty()) throw std::invalid_argument("avg_cost: empty series");
  Fixed sum;
  for (auto c : period_costs) sum += c;
  return sum.to_double() / static_cast<double>(period_costs.size());
}

std::optional<double> turnover_rate(std::span<const std::int64_t> on_hand, std::span<const std::int64_t> demand) {
  std::int64_t inv = 0;
  std::int64_t dem = 0;
  for (auto v : on_hand) inv += std::max<std::int64_t>(v, 0);
  for (auto d : demand) dem += d;
  if (dem == 0) return std::nullopt;
  return static_cast<double>(inv) / static_cast<double>(dem);
}

double stockout_rate(const std::vector<bool>& stockouts) {
  if (stockouts.empty()) throw std::invalid_argument("stockout_rate: empty series");
  const auto hits = std::count(stockouts.begin(), stockouts.end(), true);
  return static_cast<double>(hits) / static_cast<double>(stockouts.size());
}

std::vector<Fixed> system_costs(const EpisodeLog& log) {
  std::vector<Fixed> out;
  out.reserve(log.steps.size());
  for (const auto& s : log.steps) out.push_back(s.total_cost());
  return out;
}

MprRealization mpr_realization_from_log(const EpisodeLog& log, std::vector<std::int64_t>* orders) {
  const auto* params = std::get_if<MprParams>(&log.config.params);
  if (params == nullptr) throw std::invalid_argument("not an MPR log");
  MprRealization r;
  r.initial_inventory = params->initial_inventory;
  r.holding = params->holding;
  r.backorder = params->backorder;
  if (orders) orders->clear();
  for (const auto& step : log.steps) {
    r.demands.push_back(step.demand.begin()->second);
    for (const auto& p : step.placements) {
      if (!p.arrival) throw std::invalid_argument("MPR placement without arrival");
      r.order_periods.push_back(p.placed);
      r.arrivals.push_back(*p.arrival);
      r.lead_times.push_back(*p.arrival - p.placed);
      if (orders) orders->push_back(p.quantity);
    }
  }
  return r;
}

MetricsReport compute_metrics(const EpisodeLog& log) {
  MetricsReport rep;
  rep.env = log.config.env;
  rep.horizon = static_cast<int>(log.steps.size());
  if (log.steps.empty()) throw std::invalid_argument("compute_metrics: empty episode");
  const auto T = log.steps.size();

  const auto costs = system_costs(log);
  rep.avg_cost = avg_cost(costs);

  std::vector<std::int64_t> system_on_hand;
  std::vector<std::int64_t> customer_demand;
  std::vector<bool> customer_stockout;
  for (const auto& step : log.steps) {
    std::int64_t inv = 0;
    for (const auto& n : step.nodes) inv += n.on_hand;
    system_on_hand.push_back(inv);
    std::int64_t dem = 0;
    bool short_any = false;
    for (const auto& [role, d] : step.demand) {
      dem += d;
      for (const auto& n : step.nodes)
        if (n.role == role && n.backlog > 0) short_any = true;
    }
    customer_demand.push_back(dem);
    customer_stockout.push_back(short_any);
  }
  rep.turnover_rate = turnover_rate(system_on_hand, customer_demand);
  rep.stockout_rate = stockout_rate(customer_stockout);

  for (std::size_t i = 0; i < log.roles.size(); ++i) {
    const auto& role = log.roles[i];
    std::vector<Fixed> c;
    std::vector<std::int64_t> inv, dem;
    std::vector<bool> out;
    for (const auto& step : log.steps) {
      const auto& n = step.nodes.at(i);
      c.push_back(n.cost);
      inv.push_back(n.on_hand);
      dem.push_back(n.incoming);
      out.push_back(n.stockout());
    }
    rep.avg_cost_by_role[role] = avg_cost(c);
    rep.turnover_by_role[role] = turnover_rate(inv, dem);
    rep.stockout_by_role[role] = stockout_rate(out);
    rep.stockout_rate_sum += rep.stockout_by_role[role];
  }

  switch (log.config.env) {
    case EnvId::nvp: {
      const auto& p = std::get<NvpParams>(log.config.params);
      std::vector<double> q;
      std::vector<std::int64_t> qi, d;
      Fixed profit;
      for (const auto& step : log.steps) {
        const auto order = step.actions.at("newsvendor").orders.at("order");
        q.push_back(static_cast<double>(order));
        qi.push_back(order);
        d.push_back(step.demand.at("newsvendor"));
        profit += step.nodes.at(0).profit.value_or(Fixed{});
      }
      rep.mean_profit = profit.to_double() / static_cast<double>(T);
      if (const auto mu = mean(p.demand)) {
        const auto q_star = newsvendor_q_star(p.demand, p.price - p.cost, p.cost);
        rep.anchoring_alpha = anchoring_alpha(q, *mu, static_cast<double>(q_star));
      }
      if (T >= 3) rep.demand_chasing_rho = demand_chasing_rho(qi, d);
      break;
    }
    case EnvId::mpr: {
      std::vector<std::int64_t> placed;
      const auto r = mpr_realization_from_log(log, &placed);
      const auto best = expost_optimal(r);
      rep.distance = distance_to_optimal(placed, best.orders);
      break;
    }
    case EnvId::bg: {
      std::vector<std::vector<std::int64_t>> orders(log.roles.size());
      std::vector<std::int64_t> demand;
      for (const auto& step : log.steps) {
        demand.push_back(step.demand.at("retailer"));
        for (std::size_t i = 0; i < log.roles.size(); ++i)
          orders[i].push_back(step.actions.at(log.roles[i]).orders.at("upstream"));
      }
      if (T >= 2) {
        auto bw = bullwhip(orders, demand);
        rep.bullwhip_per_link = std::move(bw.per_link);
        rep.bullwhip_end_to_end = bw.end_to_end;
      }
      break;
    }
    case EnvId::twn:
    case EnvId::scn:
      break;
  }
  return rep;
}

nlohmann::json to_json(const MetricsReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["env"] = std::string(to_string(r.env));
  j["horizon"] = r.horizon;
  j["avg_cost"] = r.avg_cost;
  j["avg_cost_by_role"] = r.avg_cost_by_role;
  j["turnover_rate"] = opt(r.turnover_rate);
  nlohmann::json tr = nlohmann::json::object();
  for (const auto& [k, v] : r.turnover_by_role) tr[k] = opt(v);
  j["turnover_by_role"] = tr;
  j["stockout_rate"] = r.stockout_rate;
  j["stockout_by_role"] = r.stockout_by_role;
  j["stockout_rate_sum"] = r.stockout_rate_sum;
  j["anchoring_alpha"] = opt(r.anchoring_alpha);
  j["demand_chasing_rho"] = opt(r.demand_chasing_rho);
  j["mean_profit"] = opt(r.mean_profit);
  nlohmann::json links = nlohmann::json::array();
  for (const auto& b : r.bullwhip_per_link) links.push_back(opt(b));
  j["bullwhip_per_link"] = links;
  j["bullwhip_end_to_end"] = opt(r.bullwhip_end_to_end);
  j["distance"] = opt(r.distance);
  return j;
}

}  // namespace invbench
