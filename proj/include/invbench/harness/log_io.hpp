#pragma once

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "invbench/core/episode.hpp"

namespace invbench {

nlohmann::json step_to_json(const StepRecord& step);
// Throws std::runtime_error on malformed records.
StepRecord step_from_json(const nlohmann::json& j);

// One JSON object per period, one per line.
void write_log_jsonl(const EpisodeLog& log, std::ostream& out);

// Rebuilds a log from its periods. Roles and totals are recovered from the
// records; the end-of-episode pipeline snapshot is not stored and stays empty.
EpisodeLog read_log_jsonl(std::istream& in, const SimConfig& config);

}  // namespace invbench
