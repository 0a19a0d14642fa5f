#include "invbench/core/stochastic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "invbench/core/errors.hpp"

namespace invbench {

namespace {

constexpr double kMaxPoissonRate = 500.0;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::uniform_int: return "uniform_int";
    case ProcessKind::normal_truncated: return "normal_truncated";
    case ProcessKind::poisson: return "poisson";
    case ProcessKind::constant: return "constant";
    case ProcessKind::trace: return "trace";
  }
  return "unknown";
}

StochasticProcess make_demand(ProcessLaw law, std::string stream_id) {
  return StochasticProcess{std::move(law), std::move(stream_id), 0};
}

StochasticProcess make_lead_time(ProcessLaw law, std::string stream_id) {
  return StochasticProcess{std::move(law), std::move(stream_id), 1};
}

void validate(const StochasticProcess& p) {
  const std::string where = "process '" + p.stream_id + "': ";
  if (p.minimum < 0) throw ConfigError(where + "minimum must be >= 0");
  std::visit(overloaded{
                 [&](const UniformInt& u) {
                   if (u.low > u.high) throw ConfigError(where + "uniform_int needs low <= high");
                   if (u.low < p.minimum)
                     throw ConfigError(where + "uniform_int low must be >= " + std::to_string(p.minimum));
                 },
                 [&](const NormalTruncated& n) {
                   if (!std::isfinite(n.mean) || !std::isfinite(n.stddev) || n.stddev <= 0.0)
                     throw ConfigError(where + "normal_truncated needs finite mean and stddev > 0");
                   // Rejection sampling needs non-negligible mass above the minimum.
                   if (n.mean + 6.0 * n.stddev < static_cast<double>(p.minimum))
                     throw ConfigError(where + "normal_truncated has no mass above the minimum");
                 },
                 [&](const Poisson& po) {
                   if (!std::isfinite(po.rate) || po.rate <= 0.0 || po.rate > kMaxPoissonRate)
                     throw ConfigError(where + "poisson rate must be in (0, 500]");
                 },
                 [&](const Constant& c) {
                   if (c.value < p.minimum)
                     throw ConfigError(where + "constant must be >= " + std::to_string(p.minimum));
                 },
                 [&](const Trace& t) {
                   if (t.values.empty()) throw ConfigError(where + "trace needs at least one value");
                   for (auto v : t.values)
                     if (v < p.minimum)
                       throw ConfigError(where + "trace values must be >= " + std::to_string(p.minimum));
                 },
             },
             p.law);
}

std::string describe(const StochasticProcess& p) {
  return std::visit(
      overloaded{
          [](const UniformInt& u) {
            return "uniformly distributed integer between " + std::to_string(u.low) + " and " +
                   std::to_string(u.high) + " (inclusive)";
          },
          [](const NormalTruncated& n) {
            return "normally distributed with mean " + fmt_double(n.mean) + " and standard deviation " +
                   fmt_double(n.stddev) + ", rounded to whole units";
          },
          [](const Poisson& po) { return "Poisson distributed with mean " + fmt_double(po.rate); }, 
          [](const Constant& c) { return "always " + std::to_string(c.value); },
          [](const Trace& t) {
            std::string out = "following the sequence";
            for (std::size_t i = 0; i < t.values.size(); ++i) out += (i ? ", " : " ") + std::to_string(t.values[i]);
            return out + " (then holding the last value)";
          },
      },
      p.law);
}

std::optional<double> mean(const StochasticProcess& p) {
  return std::visit(overloaded{
                        [](const UniformInt& u) -> std::optional<double> {
                          return (static_cast<double>(u.low) + static_cast<double>(u.high)) / 2.0;
                        },
                        [&](const NormalTruncated& n) -> std::optional<double> {
                          // Mean of round(X) given X >= minimum - 0.5, by summation.
                          const double cut = static_cast<double>(p.minimum) - 0.5;
                          auto cdf = [&](double x) { return 0.5 * std::erfc(-(x - n.mean) / (n.stddev * std::numbers::sqrt2)); };
                          const double tail = 1.0 - cdf(cut);
                          const auto hi = static_cast<std::int64_t>(std::ceil(n.mean + 12.0 * n.stddev));
                          double acc = 0.0;
                          for (std::int64_t k = p.minimum; k <= hi; ++k) {
                            const double lo_edge = std::max(cut, static_cast<double>(k) - 0.5);
                            acc += static_cast<double>(k) * (cdf(static_cast<double>(k) + 0.5) - cdf(lo_edge));
                          }
                          return acc / tail;
                        },
                        [&](const Poisson& po) -> std::optional<double> {
                          if (p.minimum == 0) return po.rate;
                          // Zero-truncated (lead-time) Poisson.
                          return po.rate / (1.0 - std::exp(-po.rate));
                        },
                        [](const Constant& c) -> std::optional<double> { return static_cast<double>(c.value); },
                        [](const Trace&) -> std::optional<double> { return std::nullopt; },
                    },
                    p.law);
}

Sampler::Sampler(StochasticProcess process, std::uint64_t root_seed)
    : process_(std::move(process)), rng_(root_seed, process_.stream_id) {
  validate(process_);
}

std::int64_t Sampler::next() {
  return std::visit(overloaded{
                        [&](const UniformInt& u) {
                          const auto span = static_cast<std::uint64_t>(u.high - u.low) + 1;
                          return u.low + static_cast<std::int64_t>(rng_.below(span));
                        },
                        [&](const NormalTruncated&) { return draw_normal(); },
                        [&](const Poisson&) { return draw_poisson(); },
                        [&](const Constant& c) { return c.value; },
                        [&](const Trace& t) {
                          const std::size_t i = std::min(trace_pos_, t.values.size() - 1);
                          ++trace_pos_;
                          return t.values[i];
                        },
                    },
                    process_.law);
}

std::int64_t Sampler::draw_normal() {
  const auto& n = std::get<NormalTruncated>(process_.law);
  const double cut = static_cast<double>(process_.minimum) - 0.5;
  for (;;) {
    // Box-Muller, one variate per pair of uniforms.
    const double u1 = 1.0 - rng_.unit();  // (0, 1]
    const double u2 = rng_.unit();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    const double x = n.mean + n.stddev * z;
    if (x >= cut) return static_cast<std::int64_t>(std::llround(x));
  }
}

std::int64_t Sampler::draw_poisson() {
  const double rate = std::get<Poisson>(process_.law).rate;
  for (;;) {
    // Sequential inversion.
    const double u = rng_.unit();
    double p = std::exp(-rate);
    double cdf = p;
    std::int64_t k = 0;
    while (u >= cdf && k < 100'000) {
      ++k;
      p *= rate / static_cast<double>(k);
      cdf += p;
      if (p == 0.0 && static_cast<double>(k) > rate) break;
    }
    if (k >= process_.minimum) return k;
  }
}

std::vector<std::int64_t> sample(const StochasticProcess& process, std::uint64_t seed, std::size_t n) {
  Sampler s(process, seed);
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s.next());
  return out;
}

}  // namespace invbench
