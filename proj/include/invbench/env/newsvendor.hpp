#pragma once

#include <cstdint>
#include <memory>

#include "invbench/env/environment.hpp"

namespace invbench {

// Single-period newsvendor round: sells min(q, d), leftovers salvage at 0,
// excess demand is lost. cost is the shortfall against perfect-information
// profit: (r - c) * lost + c * leftover.
NodeRecord nvp_step(std::int64_t order, std::int64_t demand, const NvpParams& params);

std::unique_ptr<Environment> make_newsvendor(const SimConfig& config);

}  // namespace invbench
