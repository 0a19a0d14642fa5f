#include "invbench/oracles/newsvendor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace invbench {

double critical_ratio(Fixed underage, Fixed overage) {
  if (underage < Fixed{} || overage < Fixed{}) throw std::invalid_argument("underage and overage costs must be >= 0");
  if (underage == Fixed{} && overage == Fixed{})
    throw std::invalid_argument("critical ratio undefined when both costs are zero");
  return static_cast<double>(underage.raw()) / static_cast<double>(underage.raw() + overage.raw());
}

namespace {

// Smallest k in [0, n] with k / n >= cu / (cu + co), exactly.
std::int64_t fractile_rank(std::int64_t n, Fixed underage, Fixed overage) {
  const __int128 num = static_cast<__int128>(n) * underage.raw();
  const __int128 den = underage.raw() + overage.raw();
  return static_cast<std::int64_t>((num + den - 1) / den);
}

template <class Cdf>
std::int64_t scan(Cdf cdf, double ratio, std::int64_t start) {
  for (std::int64_t q = start; q < 10'000'000; ++q)
    if (cdf(q) >= ratio) return q;
  throw std::invalid_argument("critical fractile not reached");
}

}  // namespace

std::int64_t newsvendor_q_star(const StochasticProcess& demand, Fixed underage, Fixed overage) {
  const double ratio = critical_ratio(underage, overage);
  if (underage == Fixed{}) return 0;
  if (const auto* u = std::get_if<UniformInt>(&demand.law)) {
    const std::int64_t k = fractile_rank(u->high - u->low + 1, underage, overage);
    return u->low + k - 1;
  }
  if (const auto* c = std::get_if<Constant>(&demand.law)) return c->value;
  if (const auto* p = std::get_if<Poisson>(&demand.law)) {
    const double rate = p->rate;
    // CDF of the (possibly zero-truncated) Poisson, accumulated term by term.
    const double below_min = demand.minimum > 0 ? std::exp(-rate) : 0.0;
    double term = std::exp(-rate);
    double cdf = 0.0;
    for (std::int64_t q = 0;; ++q) {
      if (q > 0) term *= rate / static_cast<double>(q);
      cdf += term;
      if (q >= demand.minimum && (cdf - below_min) / (1.0 - below_min) >= ratio) return q;
      if (q > 100'000) throw std::invalid_argument("critical fractile not reached");
    }
  }
  if (const auto* n = std::get_if<NormalTruncated>(&demand.law)) {
    const double cut = static_cast<double>(demand.minimum) - 0.5;
    auto phi = [&](double x) { return 0.5 * std::erfc(-(x - n->mean) / (n->stddev * std::numbers::sqrt2)); };
    const double tail = 1.0 - phi(cut);
    return scan([&](std::int64_t q) { return (phi(static_cast<double>(q) + 0.5) - phi(cut)) / tail; }, ratio,
                demand.minimum);
  }
  throw std::invalid_argument("newsvendor optimum needs a demand distribution, not a trace");
}

}  // namespace invbench
