#include "invbench/core/episode.hpp"

#include <algorithm>

#include "invbench/core/errors.hpp"
#include "invbench/env/environment.hpp"

namespace invbench {

std::int64_t NodeRecord::total_received() const {
  std::int64_t sum = 0;
  for (const auto& [_, q] : received) sum += q;
  return sum;
}

Fixed StepRecord::total_cost() const {
  Fixed sum;
  for (const auto& n : nodes) sum += n.cost;
  return sum;
}

std::int64_t NodeSnapshot::in_transit() const {
  std::int64_t sum = 0;
  for (const auto& e : pipeline) sum += e.quantity;
  return sum;
}

Fixed EpisodeLog::total_cost() const {
  Fixed sum;
  for (const auto& [_, c] : totals) sum += c;
  return sum;
}

void validate(const SimConfig& config) {
  std::vector<std::string> problems;
  if (config.horizon < 1) problems.push_back("horizon must be >= 1");
  if (config.memory_window < 0) problems.push_back("memory_window must be >= 0");
  if (env_of(config.params) != config.env) {
    problems.push_back("parameter record is for " + std::string(to_string(env_of(config.params))) +
                       " but env is " + std::string(to_string(config.env)));
  } else {
    validate(config.params, problems);
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));
}

namespace {

void check_action(const Action& action, const RoleInfo& role, int period) {
  for (const auto& ch : role.channels) {
    auto it = action.orders.find(ch);
    if (it == action.orders.end())
      throw EpisodeAborted(period, role.name, ProtocolErrc::invalid_action, "missing order channel '" + ch + "'");
    if (it->second < 0)
      throw EpisodeAborted(period, role.name, ProtocolErrc::invalid_action,
                           "negative quantity " + std::to_string(it->second) + " on channel '" + ch + "'");
  }
  for (const auto& [ch, _] : action.orders) {
    if (std::find(role.channels.begin(), role.channels.end(), ch) == role.channels.end())
      throw EpisodeAborted(period, role.name, ProtocolErrc::invalid_action, "unknown order channel '" + ch + "'");
  }
}

}  // namespace

EpisodeLog run_episode(const SimConfig& config, std::span<Agent* const> agents) {
  validate(config);
  auto env = make_environment(config);
  const auto& roles = env->roles();
  if (agents.size() != roles.size()) {
    throw ConfigError(std::string(to_string(config.env)) + " needs " + std::to_string(roles.size()) +
                      " agents, got " + std::to_string(agents.size()));
  }
  if (std::any_of(agents.begin(), agents.end(), [](const Agent* a) { return a == nullptr; }))
    throw ConfigError("null agent handle");

  EpisodeLog log;
  log.config = config;
  for (const auto& r : roles) {
    log.roles.push_back(r.name);
    log.totals[r.name] = Fixed{};
  }
  log.steps.reserve(static_cast<std::size_t>(config.horizon));

  const std::size_t n = roles.size();
  std::vector<MemoryWindow> memories(n, MemoryWindow(static_cast<std::size_t>(config.memory_window)));

  for (std::size_t i = 0; i < n; ++i) {
    EpisodeContext ctx{config.env, roles[i].name, roles[i].channels, config.horizon, config.seed, config.info_sharing};
    try {
      agents[i]->begin_episode(ctx);
    } catch (const ProtocolError& e) {
      throw EpisodeAborted(0, roles[i].name, e.code(), e.what());
    }
  }

  for (int t = 1; t <= config.horizon; ++t) {
    env->begin_period(t);
    // Every observation for period t is fixed before any agent acts.
    std::vector<std::optional<Observation>> observations(n);
    for (std::size_t i = 0; i < n; ++i)
      if (env->decides(i, t)) observations[i] = env->observe(i);

    std::vector<std::optional<Action>> actions(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!observations[i]) continue;
      Action act;
      try {
        act = agents[i]->decide(*observations[i], memories[i]);
      } catch (const ProtocolError& e) {
        throw EpisodeAborted(t, roles[i].name, e.code(), e.what());
      }
      check_action(act, roles[i], t);
      actions[i] = std::move(act);
    }

    StepRecord record = env->finish_period(actions);
    record.period = t;
    for (std::size_t i = 0; i < n; ++i) {
      if (!observations[i]) continue;
      record.observations[roles[i].name] = *observations[i];
      record.actions[roles[i].name] = *actions[i];
      memories[i].push(std::move(*observations[i]), std::move(*actions[i]));
    }
    for (const auto& node : record.nodes) log.totals[node.role] += node.cost;
    log.steps.push_back(std::move(record));
  }

  log.final_state = env->snapshot();
  for (std::size_t i = 0; i < n; ++i) {
    try {
      agents[i]->end_episode(log.totals);
    } catch (const ProtocolError& e) {
      throw EpisodeAborted(config.horizon, roles[i].name, e.code(), e.what());
    }
  }
  return log;
}

std::vector<std::string> verify_costs(const EpisodeLog& log) {
  std::vector<std::string> mismatches;
  for (const auto& step : log.steps) {
    for (std::size_t i = 0; i < step.nodes.size(); ++i) {
      const auto& node = step.nodes[i];
      const Fixed expected = node_cost(cost_rates(log.config.params, i), node);
      if (expected != node.cost) {
        mismatches.push_back("period " + std::to_string(step.period) + " role " + node.role + ": logged " +
                             node.cost.to_string() + ", recomputed " + expected.to_string());
      }
    }
  }
  return mismatches;
}

}  // namespace invbench
