#pragma once

#include <memory>
#include <vector>

#include "invbench/agents/scripted.hpp"
#include "invbench/core/episode.hpp"
#include "invbench/env/environment.hpp"

namespace testing {

// Runs one episode with `make(i)` building the agent for role i.
template <typename Make>
invbench::EpisodeLog run_with(const invbench::SimConfig& config, Make make) {
  std::vector<std::unique_ptr<invbench::Agent>> owned;
  std::vector<invbench::Agent*> agents;
  const auto roles = invbench::roles_of(config.params);
  for (std::size_t i = 0; i < roles.size(); ++i) {
    owned.push_back(make(i));
    agents.push_back(owned.back().get());
  }
  return invbench::run_episode(config, agents);
}

inline invbench::SimConfig config_for(invbench::EnvId env, int horizon, std::uint64_t seed) {
  invbench::SimConfig c;
  c.env = env;
  c.horizon = horizon;
  c.seed = seed;
  c.params = invbench::default_params(env);
  return c;
}

}  // namespace testing
