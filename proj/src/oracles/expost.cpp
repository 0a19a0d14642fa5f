#include "invbench/oracles/expost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace invbench {

namespace {

void check_instance(const MprRealization& r) {
  const std::size_t m = r.order_periods.size();
  if (r.arrivals.size() != m) throw std::invalid_argument("one arrival per order slot required");
  for (std::size_t i = 0; i < m; ++i) {
    if (r.arrivals[i] <= r.order_periods[i]) throw std::invalid_argument("arrival must follow placement");
    if (i > 0 && r.arrivals[i] < r.arrivals[i - 1]) throw std::invalid_argument("order arrivals cross");
  }
  for (auto d : r.demands)
    if (d < 0) throw std::invalid_argument("negative demand");
}

Fixed period_cost(std::int64_t level, Fixed h, Fixed b) {
  return level >= 0 ? h * level : b * (-level);
}

}  // namespace

int optimal_replenishment_period(int arrival, int next_arrival, Fixed holding, Fixed backorder) {
  const std::int64_t n = next_arrival - arrival;
  if (n <= 0) return arrival - 1;
  const std::int64_t rates = holding.raw() + backorder.raw();
  if (rates == 0) return arrival - 1;
  const auto uncovered = static_cast<std::int64_t>(static_cast<__int128>(holding.raw()) * n / rates);
  return static_cast<int>(next_arrival - 1 - uncovered);
}

Fixed mpr_total_cost(const MprRealization& r, std::span<const std::int64_t> orders) {
  if (orders.size() != r.arrivals.size()) throw std::invalid_argument("one order per slot required");
  std::int64_t level = r.initial_inventory;
  Fixed total;
  const int horizon = static_cast<int>(r.demands.size());
  for (int t = 1; t <= horizon; ++t) {
    for (std::size_t m = 0; m < orders.size(); ++m)
      if (r.arrivals[m] == t) level += orders[m];
    level -= r.demands[static_cast<std::size_t>(t - 1)];
    total += period_cost(level, r.holding, r.backorder);
  }
  return total;
}

ExPostSolution expost_optimal(const MprRealization& r) {
  check_instance(r);
  const int horizon = static_cast<int>(r.demands.size());
  std::vector<std::int64_t> cum(r.demands.size() + 1, 0);
  for (std::size_t t = 0; t < r.demands.size(); ++t) cum[t + 1] = cum[t] + r.demands[t];

  ExPostSolution sol;
  const std::size_t slots = r.arrivals.size();
  std::int64_t ordered = 0;  // optimal orders so far
  for (std::size_t m = 0; m < slots; ++m) {
    const int v = r.arrivals[m];
    const int next = std::min(m + 1 < slots ? r.arrivals[m + 1] : horizon + 1, horizon + 1);
    std::int64_t a = 0;
    std::optional<int> covered;
    if (v <= horizon) {
      const int s = optimal_replenishment_period(v, next, r.holding, r.backorder);
      if (s >= v) {
        covered = s;
        // d[v, s] - I_v where I_v = I_1 + ordered - d[1, v-1].
        const std::int64_t window_demand = cum[static_cast<std::size_t>(s)] - cum[static_cast<std::size_t>(v - 1)];
        const std::int64_t level_at_arrival = r.initial_inventory + ordered - cum[static_cast<std::size_t>(v - 1)];
        a = std::max<std::int64_t>(window_demand - level_at_arrival, 0);
      }
    }
    sol.orders.push_back(a);
    sol.replenishment_periods.push_back(covered);
    ordered += a;
  }
  sol.total_cost = mpr_total_cost(r, sol.orders);
  return sol;
}

DpSolution brute_force_dp(const MprRealization& r, std::int64_t quantity_cap) {
  check_instance(r);
  const std::size_t slots = r.arrivals.size();
  if (slots > 4) throw std::invalid_argument("brute_force_dp: more than 4 order slots");
  if (quantity_cap < 0 || quantity_cap > 200) throw std::invalid_argument("brute_force_dp: quantity cap must be in [0, 200]");

  const int horizon = static_cast<int>(r.demands.size());
  std::int64_t total_demand = 0;
  for (auto d : r.demands) total_demand += d;
  const std::int64_t lo = r.initial_inventory - total_demand;
  const std::int64_t hi = r.initial_inventory + static_cast<std::int64_t>(slots) * quantity_cap;
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  auto idx = [&](std::int64_t level) { return static_cast<std::size_t>(level - lo); };

  // kInf marks unreachable levels.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best(width, kInf);
  best[idx(r.initial_inventory)] = 0;
  // choice[m][level after slot m] = quantity that reached it.
  std::vector<std::vector<std::int64_t>> choice(slots, std::vector<std::int64_t>(width, 0));

  for (int t = 1; t <= horizon; ++t) {
    for (std::size_t m = 0; m < slots; ++m) {
      if (r.arrivals[m] != t) continue;
      std::vector<std::int64_t> next(width, kInf);
      for (std::size_t x = 0; x < width; ++x) {
        if (best[x] == kInf) continue;
        for (std::int64_t a = 0; a <= quantity_cap && x + static_cast<std::size_t>(a) < width; ++a) {
          const std::size_t y = x + static_cast<std::size_t>(a);
          if (best[x] < next[y]) {
            next[y] = best[x];
            choice[m][y] = a;
          }
        }
      }
      best = std::move(next);
    }
    const std::int64_t d = r.demands[static_cast<std::size_t>(t - 1)];
    std::vector<std::int64_t> next(width, kInf);
    for (std::size_t x = 0; x < width; ++x) {
      if (best[x] == kInf) continue;
      const std::int64_t level = lo + static_cast<std::int64_t>(x) - d;
      next[idx(level)] = best[x] + period_cost(level, r.holding, r.backorder).raw();
    }
    best = std::move(next);
  }

  const auto end = std::min_element(best.begin(), best.end());
  DpSolution sol;
  sol.cost = Fixed::from_raw(*end);
  sol.orders.assign(slots, 0);
  std::int64_t level = lo + (end - best.begin());
  for (int t = horizon; t >= 1; --t) {
    level += r.demands[static_cast<std::size_t>(t - 1)];
    for (std::size_t m = slots; m-- > 0;) {
      if (r.arrivals[m] != t) continue;
      sol.orders[m] = choice[m][idx(level)];
      level -= sol.orders[m];
    }
  }
  return sol;
}

double distance_to_optimal(std::span<const std::int64_t> orders, std::span<const std::int64_t> optimal) {
  if (orders.size() != optimal.size()) throw std::invalid_argument("order vectors differ in length");
  double sum = 0.0;
  for (std::size_t m = 0; m < orders.size(); ++m) {
    const auto diff = static_cast<double>(orders[m] - optimal[m]);
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double distance_to_optimal(std::span<const double> orders, std::span<const double> optimal) {
  if (orders.size() != optimal.size()) throw std::invalid_argument("order vectors differ in length");
  double sum = 0.0;
  for (std::size_t m = 0; m < orders.size(); ++m) sum += (orders[m] - optimal[m]) * (orders[m] - optimal[m]);
  return std::sqrt(sum);
}

}  // namespace invbench
