#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invbench/harness/config.hpp"
#include "invbench/metrics/metrics.hpp"

namespace invbench {

inline constexpr int kReportSchemaVersion = 1;

struct EpisodeFailure {
  int period = 0;
  std::string role;
  int code = 0;  // ProtocolErrc value, 0 when not a protocol failure
  std::string detail;
};

struct EpisodeOutcome {
  std::uint64_t seed = 0;
  std::optional<MetricsReport> metrics;
  std::optional<EpisodeFailure> failure;
};

struct Stat {
  std::optional<double> mean;
  std::optional<double> std;  // population std over seeds
  int n = 0;                  // seeds where the metric is defined
  bool operator==(const Stat&) const = default;
};

struct BatchReport {
  int schema_version = kReportSchemaVersion;
  std::string label;
  EnvId env = EnvId::nvp;
  std::string framing = "none";
  bool info_sharing = false;
  bool cognitive_reflection = false;
  int episodes = 0;
  int failures = 0;
  std::map<std::string, Stat> metrics;
  bool operator==(const BatchReport&) const = default;
};

// Metric names every report carries, defined or not.
const std::vector<std::string>& report_metric_names();

// Mean (and std) over the seeds of each per-seed metric; seeds where a metric
// is undefined are left out of its stat.
BatchReport aggregate(const ExperimentConfig& config, const std::vector<EpisodeOutcome>& outcomes);

struct BatchResult {
  std::vector<EpisodeOutcome> episodes;
  BatchReport report;
  bool ok() const { return report.failures == 0; }
};

// Runs every seed on a bounded worker pool and writes, under output_dir:
// run.json, logs/seed_<s>.jsonl (or seed_<s>.error.json), metrics.csv,
// report.csv and report.json.
BatchResult run_batch(const ExperimentConfig& config);

// Recomputes metrics from a batch directory written by run_batch.
BatchResult reload_batch(const std::filesystem::path& dir);

nlohmann::json to_json(const BatchReport& r);
// Throws std::runtime_error when the schema version or metric set differs.
BatchReport report_from_json(const nlohmann::json& j);

std::string report_csv(const std::vector<BatchReport>& reports);
std::string metrics_csv(const std::vector<EpisodeOutcome>& outcomes);

struct Tables {
  std::string table_csv;     // agent, env, avg_cost, turnover_rate, stockout_rate, distance
  std::string bullwhip_csv;  // agent, setting, beta_mean, beta_std
};

// Throws std::runtime_error when the reports do not share the schema.
Tables emit_tables(const std::vector<BatchReport>& reports);

}  // namespace invbench
