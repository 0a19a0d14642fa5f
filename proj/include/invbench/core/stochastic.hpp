#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invbench/core/rng.hpp"

namespace invbench {

struct UniformInt {
  std::int64_t low = 0;
  std::int64_t high = 0;
  bool operator==(const UniformInt&) const = default;
};

// Normal draw rounded to the nearest integer, conditioned on landing at or
// above the process minimum.
struct NormalTruncated {
  double mean = 0.0;
  double stddev = 1.0;
  bool operator==(const NormalTruncated&) const = default;
};

struct Poisson {
  double rate = 1.0;
  bool operator==(const Poisson&) const = default;
};

struct Constant {
  std::int64_t value = 0;
  bool operator==(const Constant&) const = default;
};

// Replays the listed values; past the end the last value is held.
struct Trace {
  std::vector<std::int64_t> values;
  bool operator==(const Trace&) const = default;
};

enum class ProcessKind { uniform_int, normal_truncated, poisson, constant, trace };

std::string_view to_string(ProcessKind kind);

using ProcessLaw = std::variant<UniformInt, NormalTruncated, Poisson, Constant, Trace>;

// Seeded generator spec for demands and lead times. `minimum` is 0 for demand
// streams and 1 for lead-time streams.
struct StochasticProcess {
  ProcessLaw law = Constant{0};
  std::string stream_id = "demand";
  std::int64_t minimum = 0;

  ProcessKind kind() const { return static_cast<ProcessKind>(law.index()); }
  bool operator==(const StochasticProcess&) const = default;
};

StochasticProcess make_demand(ProcessLaw law, std::string stream_id = "demand");
StochasticProcess make_lead_time(ProcessLaw law, std::string stream_id = "lead_time");

// Throws ConfigError when parameters are inconsistent with the kind or the
// process minimum (negative variance, low > high, lead time 0, ...).
void validate(const StochasticProcess& process);

// Human-readable description used in observation context text.
std::string describe(const StochasticProcess& process);

// Analytic mean where it exists (trace has none).
std::optional<double> mean(const StochasticProcess& process);

class Sampler {
 public:
  Sampler(StochasticProcess process, std::uint64_t root_seed);

  std::int64_t next();
  const StochasticProcess& process() const { return process_; }

 private:
  std::int64_t draw_normal();
  std::int64_t draw_poisson();

  StochasticProcess process_;
  StreamRng rng_;
  std::size_t trace_pos_ = 0;
};

// n draws of `process` under `seed`, keyed by the process stream id.
std::vector<std::int64_t> sample(const StochasticProcess& process, std::uint64_t seed, std::size_t n);

}  // namespace invbench
