#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/core/episode.hpp"
#include "invbench/env/multi_period.hpp"

namespace invbench {

// Population standard deviation. Empty when the series is empty.
std::optional<double> population_std(std::span<const std::int64_t> values);

// Pearson correlation; empty when either series has zero variance.
std::optional<double> pearson(std::span<const std::int64_t> x, std::span<const std::int64_t> y);

// Anchoring factor: per-round adjustment a'_t = (q_t - mu) / (q* - mu),
// alpha = 1 - mean(a'_t). Empty when q* == mu.
std::optional<double> anchoring_alpha(std::span<const double> orders, double mean_demand, double optimal_order);

// Correlation of q_t with d_{t-1} for t = 2..T, taking the full series
// q_1..q_T and d_1..d_T. Requires T >= 3 (std::invalid_argument otherwise).
std::optional<double> demand_chasing_rho(std::span<const std::int64_t> orders, std::span<const std::int64_t> demands);

struct BullwhipResult {
  // Link 0 compares retailer orders with customer demand, link i compares
  // echelon i orders with echelon i-1 orders.
  std::vector<std::optional<double>> per_link;
  std::optional<double> end_to_end;
};

// orders_by_echelon is ordered downstream first. Ratios of population
// standard deviations; a link with a flat downstream series is empty.
BullwhipResult bullwhip(const std::vector<std::vector<std::int64_t>>& orders_by_echelon,
                        std::span<const std::int64_t> customer_demand);

double avg_cost(std::span<const Fixed> period_costs);
// sum of on-hand / sum of demand; empty when total demand is zero.
std::optional<double> turnover_rate(std::span<const std::int64_t> on_hand, std::span<const std::int64_t> demand);
double stockout_rate(const std::vector<bool>& stockouts);

struct MetricsReport {
  EnvId env = EnvId::nvp;
  int horizon = 0;

  double avg_cost = 0.0;
  std::map<std::string, double> avg_cost_by_role;
  std::optional<double> turnover_rate;
  std::map<std::string, std::optional<double>> turnover_by_role;
  // Share of periods in which some customer demand went unfilled.
  double stockout_rate = 0.0;
  std::map<std::string, double> stockout_by_role;
  double stockout_rate_sum = 0.0;

  std::optional<double> anchoring_alpha;
  std::optional<double> demand_chasing_rho;
  std::optional<double> mean_profit;

  std::vector<std::optional<double>> bullwhip_per_link;
  std::optional<double> bullwhip_end_to_end;

  std::optional<double> distance;

  bool operator==(const MetricsReport&) const = default;
};

MetricsReport compute_metrics(const EpisodeLog& log);

// Per-period cost series of the whole system.
std::vector<Fixed> system_costs(const EpisodeLog& log);

// The realized MPR instance recorded in a log, with the orders that were
// placed. Throws std::invalid_argument for non-MPR logs.
MprRealization mpr_realization_from_log(const EpisodeLog& log, std::vector<std::int64_t>* orders = nullptr);

nlohmann::json to_json(const MetricsReport& report);

}  // namespace invbench
