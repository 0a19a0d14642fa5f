#include "invbench/harness/batch.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "invbench/core/errors.hpp"
#include "invbench/harness/format.hpp"
#include "invbench/harness/log_io.hpp"

namespace invbench {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxLinks = BeerGameParams::kEchelons;

std::vector<std::string> build_metric_names() {
  std::vector<std::string> names = {"avg_cost",          "turnover_rate",      "stockout_rate",
                                    "stockout_rate_sum", "anchoring_alpha",    "demand_chasing_rho",
                                    "mean_profit",       "distance",           "bullwhip_end_to_end"};
  for (std::size_t i = 1; i <= kMaxLinks; ++i) names.push_back("bullwhip_link_" + std::to_string(i));
  return names;
}

std::map<std::string, std::optional<double>> flatten(const MetricsReport& m) {
  std::map<std::string, std::optional<double>> out;
  for (const auto& name : report_metric_names()) out[name] = std::nullopt;
  out["avg_cost"] = m.avg_cost;
  out["turnover_rate"] = m.turnover_rate;
  out["stockout_rate"] = m.stockout_rate;
  out["stockout_rate_sum"] = m.stockout_rate_sum;
  out["anchoring_alpha"] = m.anchoring_alpha;
  out["demand_chasing_rho"] = m.demand_chasing_rho;
  out["mean_profit"] = m.mean_profit;
  out["distance"] = m.distance;
  out["bullwhip_end_to_end"] = m.bullwhip_end_to_end;
  for (std::size_t i = 0; i < m.bullwhip_per_link.size() && i < kMaxLinks; ++i)
    out["bullwhip_link_" + std::to_string(i + 1)] = m.bullwhip_per_link[i];
  return out;
}

Stat stat_of(const std::vector<double>& xs) {
  Stat s;
  s.n = static_cast<int>(xs.size());
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  s.mean = mean;
  s.std = std::sqrt(ss / static_cast<double>(xs.size()));
  return s;
}

fs::path log_path(const fs::path& dir, std::uint64_t seed) {
  return dir / "logs" / ("seed_" + std::to_string(seed) + ".jsonl");
}

fs::path error_path(const fs::path& dir, std::uint64_t seed) {
  return dir / "logs" / ("seed_" + std::to_string(seed) + ".error.json");
}

json failure_to_json(const EpisodeFailure& f) {
  std::string name = f.code ? std::string(to_string(static_cast<ProtocolErrc>(f.code))) : "error";
  return {{"period", f.period}, {"role", f.role}, {"code", f.code}, {"error", name}, {"detail", f.detail}};
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  out << content;
}

EpisodeOutcome run_one(const ExperimentConfig& config, std::uint64_t seed, const fs::path& dir) {
  EpisodeOutcome outcome;
  outcome.seed = seed;
  try {
    const auto sim = sim_config(config, seed);
    AgentBinding binding{sim, config.framing, config.cognitive_reflection};
    std::vector<std::unique_ptr<Agent>> owned;
    std::vector<Agent*> agents;
    for (const auto& [role, spec] : resolve_roster(config)) {
      owned.push_back(make_agent(spec, binding));
      agents.push_back(owned.back().get());
    }
    const auto log = run_episode(sim, agents);
    std::ostringstream text;
    write_log_jsonl(log, text);
    write_file(log_path(dir, seed), text.str());
    outcome.metrics = compute_metrics(log);
  } catch (const EpisodeAborted& e) {
    outcome.failure = EpisodeFailure{e.period(), e.role(), static_cast<int>(e.code()), e.what()};
  } catch (const std::exception& e) {
    outcome.failure = EpisodeFailure{0, "", 0, e.what()};
  }
  if (outcome.failure) write_file(error_path(dir, seed), failure_to_json(*outcome.failure).dump(2) + "\n");
  return outcome;
}

void write_reports(const fs::path& dir, const BatchResult& r) {
  write_file(dir / "metrics.csv", metrics_csv(r.episodes));
  write_file(dir / "report.csv", report_csv({r.report}));
  write_file(dir / "report.json", to_json(r.report).dump(2) + "\n");
}

}  // namespace

const std::vector<std::string>& report_metric_names() {
  static const auto names = build_metric_names();
  return names;
}

BatchReport aggregate(const ExperimentConfig& config, const std::vector<EpisodeOutcome>& outcomes) {
  BatchReport r;
  r.label = config.label;
  r.env = config.env;
  r.framing = config.framing;
  r.info_sharing = config.info_sharing;
  r.cognitive_reflection = config.cognitive_reflection;
  r.episodes = static_cast<int>(outcomes.size());
  std::map<std::string, std::vector<double>> values;
  for (const auto& o : outcomes) {
    if (o.failure || !o.metrics) {
      ++r.failures;
      continue;
    }
    for (const auto& [name, v] : flatten(*o.metrics))
      if (v) values[name].push_back(*v);
  }
  for (const auto& name : report_metric_names()) r.metrics[name] = stat_of(values[name]);
  return r;
}

BatchResult run_batch(const ExperimentConfig& config) {
  validate(config);
  const fs::path dir = config.output_dir;
  fs::create_directories(dir / "logs");
  for (auto seed : config.seeds) {
    fs::remove(log_path(dir, seed));
    fs::remove(error_path(dir, seed));
  }
  write_file(dir / "run.json", to_json(config).dump(2) + "\n");

  BatchResult result;
  result.episodes.resize(config.seeds.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.seeds.size(); i = next++)
      result.episodes[i] = run_one(config, config.seeds[i], dir);
  };
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(config.workers), config.seeds.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  result.report = aggregate(config, result.episodes);
  write_reports(dir, result);
  return result;
}

BatchResult reload_batch(const fs::path& dir) {
  std::ifstream in(dir / "run.json");
  if (!in) throw ConfigError("no run.json in '" + dir.string() + "'");
  const auto config = config_from_json(json::parse(in));
  BatchResult result;
  for (auto seed : config.seeds) {
    EpisodeOutcome o;
    o.seed = seed;
    std::ifstream log_in(log_path(dir, seed));
    if (!log_in) {
      std::ifstream err_in(error_path(dir, seed));
      EpisodeFailure f{0, "", 0, "no log for seed " + std::to_string(seed)};
      if (err_in) {
        const auto j = json::parse(err_in);
        f = EpisodeFailure{j.at("period").get<int>(), j.at("role").get<std::string>(), j.at("code").get<int>(),
                           j.at("detail").get<std::string>()};
      }
      o.failure = f;
    } else {
      o.metrics = compute_metrics(read_log_jsonl(log_in, sim_config(config, seed)));
    }
    result.episodes.push_back(std::move(o));
  }
  result.report = aggregate(config, result.episodes);
  return result;
}

json to_json(const BatchReport& r) {
  json metrics = json::object();
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  for (const auto& [name, s] : r.metrics) metrics[name] = {{"mean", opt(s.mean)}, {"std", opt(s.std)}, {"n", s.n}};
  return {{"schema_version", r.schema_version},
          {"label", r.label},
          {"env", std::string(to_string(r.env))},
          {"framing", r.framing},
          {"info_sharing", r.info_sharing},
          {"cognitive_reflection", r.cognitive_reflection},
          {"episodes", r.episodes},
          {"failures", r.failures},
          {"metrics", metrics}};
}

BatchReport report_from_json(const json& j) {
  BatchReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kReportSchemaVersion)
    throw std::runtime_error("report schema version " + std::to_string(r.schema_version) + " is not supported");
  r.label = j.at("label").get<std::string>();
  r.env = env_id_from_string(j.at("env").get<std::string>());
  r.framing = j.at("framing").get<std::string>();
  r.info_sharing = j.at("info_sharing").get<bool>();
  r.cognitive_reflection = j.at("cognitive_reflection").get<bool>();
  r.episodes = j.at("episodes").get<int>();
  r.failures = j.at("failures").get<int>();
  auto opt = [](const json& v) { return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()); };
  for (const auto& [name, s] : j.at("metrics").items())
    r.metrics[name] = Stat{opt(s.at("mean")), opt(s.at("std")), s.at("n").get<int>()};
  if (r.metrics.size() != report_metric_names().size())
    throw std::runtime_error("report metric set does not match the schema");
  for (const auto& name : report_metric_names())
    if (!r.metrics.count(name)) throw std::runtime_error("report lacks metric '" + name + "'");
  return r;
}

std::string report_csv(const std::vector<BatchReport>& reports) {
  std::ostringstream s;
  s << "label,env,framing,info_sharing,cognitive_reflection,episodes,failures";
  for (const auto& name : report_metric_names()) s << "," << name << "_mean," << name << "_std";
  s << "\n";
  for (const auto& r : reports) {
    s << csv_field(r.label) << "," << to_string(r.env) << "," << r.framing << "," << (r.info_sharing ? 1 : 0) << ","
      << (r.cognitive_reflection ? 1 : 0) << "," << r.episodes << "," << r.failures;
    for (const auto& name : report_metric_names()) {
      const auto& st = r.metrics.at(name);
      s << "," << format_number(st.mean) << "," << format_number(st.std);
    }
    s << "\n";
  }
  return s.str();
}

std::string metrics_csv(const std::vector<EpisodeOutcome>& outcomes) {
  std::ostringstream s;
  s << "seed,status";
  for (const auto& name : report_metric_names()) s << "," << name;
  s << "\n";
  for (const auto& o : outcomes) {
    s << o.seed << "," << (o.failure ? "aborted" : "ok");
    std::map<std::string, std::optional<double>> flat;
    if (o.metrics) flat = flatten(*o.metrics);
    for (const auto& name : report_metric_names()) s << "," << format_number(flat.count(name) ? flat[name] : std::nullopt);
    s << "\n";
  }
  return s.str();
}

Tables emit_tables(const std::vector<BatchReport>& reports) {
  for (const auto& r : reports) {
    if (r.schema_version != kReportSchemaVersion) throw std::runtime_error("report '" + r.label + "' has another schema version");
    for (const auto& name : report_metric_names())
      if (!r.metrics.count(name)) throw std::runtime_error("report '" + r.label + "' lacks metric '" + name + "'");
  }
  Tables t;
  std::ostringstream table;
  table << "agent,env,avg_cost,turnover_rate,stockout_rate,distance\n";
  std::ostringstream bw;
  bw << "agent,setting,beta_mean,beta_std\n";
  for (const auto& r : reports) {
    table << csv_field(r.label) << "," << to_string(r.env) << "," << format_number(r.metrics.at("avg_cost").mean) << ","
          << format_number(r.metrics.at("turnover_rate").mean) << "," << format_number(r.metrics.at("stockout_rate").mean)
          << "," << format_number(r.metrics.at("distance").mean) << "\n";
    const auto& beta = r.metrics.at("bullwhip_end_to_end");
    if (beta.n > 0)
      bw << csv_field(r.label) << "," << (r.info_sharing ? "info_sharing" : "baseline") << "," << format_number(beta.mean)
         << "," << format_number(beta.std) << "\n";
  }
  t.table_csv = table.str();
  t.bullwhip_csv = bw.str();
  return t;
}

}  // namespace invbench
