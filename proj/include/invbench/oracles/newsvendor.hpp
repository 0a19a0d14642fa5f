#pragma once

#include <cstdint>

#include "invbench/core/fixed.hpp"
#include "invbench/core/stochastic.hpp"

namespace invbench {

// c_u / (c_u + c_o). Throws std::invalid_argument for negative inputs or
// when both are zero.
double critical_ratio(Fixed underage, Fixed overage);

// Smallest order q >= 0 with P(D <= q) >= c_u / (c_u + c_o). Uniform and
// constant demand are compared in exact integer arithmetic. Trace demand has
// no distribution and is rejected with std::invalid_argument.
std::int64_t newsvendor_q_star(const StochasticProcess& demand, Fixed underage, Fixed overage);

}  // namespace invbench
