#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "invbench/core/errors.hpp"
#include "invbench/harness/batch.hpp"
#include "invbench/harness/format.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kEpisodeFailure = 1;
constexpr int kConfigError = 2;

void print_problems(const invbench::ConfigError& e) {
  std::cerr << "config error:\n";
  if (e.problems().empty())
    std::cerr << "  " << e.what() << "\n";
  else
    for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
}

int cmd_run(const std::string& file, int seeds, const std::string& out) {
  auto config = invbench::load_config(file);
  if (seeds > 0) {
    config.seeds.clear();
    for (int i = 1; i <= seeds; ++i) config.seeds.push_back(static_cast<std::uint64_t>(i));
  }
  if (!out.empty()) config.output_dir = out;
  invbench::validate(config);
  const auto result = invbench::run_batch(config);
  for (const auto& e : result.episodes) {
    if (!e.failure) continue;
    std::cerr << "seed " << e.seed << " aborted";
    if (e.failure->period > 0) std::cerr << " at period " << e.failure->period << " (" << e.failure->role << ")";
    std::cerr << ": " << e.failure->detail << "\n";
  }
  std::cout << config.label << ": " << result.report.episodes - result.report.failures << "/" << result.report.episodes
            << " episodes, avg_cost " << invbench::format_number(result.report.metrics.at("avg_cost").mean)
            << ", output in " << config.output_dir << "\n";
  return result.ok() ? kOk : kEpisodeFailure;
}

int cmd_report(const std::vector<std::string>& dirs, const std::string& format, const std::string& out) {
  std::vector<invbench::BatchReport> reports;
  bool failed = false;
  for (const auto& d : dirs) {
    auto r = invbench::reload_batch(d);
    failed = failed || !r.ok();
    reports.push_back(std::move(r.report));
  }
  const auto tables = invbench::emit_tables(reports);
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) all.push_back(invbench::to_json(r));
  if (format == "json")
    std::cout << all.dump(2) << "\n";
  else
    std::cout << tables.table_csv;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    std::ofstream(std::filesystem::path(out) / "table.csv", std::ios::binary) << tables.table_csv;
    std::ofstream(std::filesystem::path(out) / "bullwhip.csv", std::ios::binary) << tables.bullwhip_csv;
    std::ofstream(std::filesystem::path(out) / "reports.csv", std::ios::binary) << invbench::report_csv(reports);
    std::ofstream(std::filesystem::path(out) / "reports.json", std::ios::binary) << all.dump(2) << "\n";
  }
  return failed ? kEpisodeFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded inventory-replenishment simulations and bias metrics"};
  app.require_subcommand(1);

  std::string config_file;
  int seeds = 0;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run a batch of episodes");
  run->add_option("--config", config_file, "Experiment config (JSON)")->required();
  run->add_option("--seeds", seeds, "Use seeds 1..N instead of the configured list")->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");

  std::vector<std::string> in_dirs;
  std::string format = "csv";
  std::string report_out;
  auto* report = app.add_subcommand("report", "Recompute reports from batch directories");
  report->add_option("--in", in_dirs, "Batch output directory (repeatable)")->required();
  report->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--out", report_out, "Also write table.csv, bullwhip.csv and reports to this directory");

  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Check a config without running it");
  validate->add_option("--config", validate_file, "Experiment config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_file, seeds, out_dir);
    if (*report) return cmd_report(in_dirs, format, report_out);
    if (*validate) {
      const auto c = invbench::load_config(validate_file);
      std::cout << "ok: " << c.label << " (" << invbench::to_string(c.env) << ", " << c.seeds.size() << " seeds)\n";
      return kOk;
    }
  } catch (const invbench::ConfigError& e) {
    print_problems(e);
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEpisodeFailure;
  }
  return kOk;
}
