#pragma once

#include <string>

#include "invbench/core/memory.hpp"
#include "invbench/core/types.hpp"

namespace invbench {

// Plain-text description of an observation and the agent's recent history.
// Deterministic; partner state appears only when the observation carries it.
std::string render_context(const Observation& obs, const MemoryWindow& memory);

}  // namespace invbench
