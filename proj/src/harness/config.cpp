#include "invbench/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "invbench/core/errors.hpp"
#include "invbench/env/environment.hpp"
#include "invbench/harness/format.hpp"

namespace invbench {

using nlohmann::json;

namespace {

// Runs `f`, turning any exception into a collected problem.
template <typename F>
void collect(std::vector<std::string>& problems, F&& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    if (e.problems().empty())
      problems.push_back(e.what());
    else
      problems.insert(problems.end(), e.problems().begin(), e.problems().end());
  } catch (const std::exception& e) {
    problems.push_back(e.what());
  }
}

bool multi_agent(EnvId env) { return env == EnvId::bg || env == EnvId::twn || env == EnvId::scn; }

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  std::vector<std::string> problems;
  ExperimentConfig c;
  static const std::set<std::string> kTop = {"label", "environment", "agents", "seeds", "framing",
                                             "info_sharing", "cognitive_reflection", "output_dir", "workers"};
  for (const auto& [k, _] : j.items())
    if (!kTop.count(k)) problems.push_back("unknown field '" + k + "'");

  collect(problems, [&] {
    if (j.contains("label")) c.label = j.at("label").get<std::string>();
  });

  bool env_ok = false;
  if (!j.contains("environment") || !j.at("environment").is_object()) {
    problems.push_back("missing 'environment' object");
  } else {
    const auto& e = j.at("environment");
    static const std::set<std::string> kEnv = {"id", "horizon", "memory_window", "params"};
    for (const auto& [k, _] : e.items())
      if (!kEnv.count(k)) problems.push_back("environment: unknown field '" + k + "'");
    collect(problems, [&] {
      if (!e.contains("id")) throw ConfigError("environment: missing 'id'");
      c.env = env_id_from_string(e.at("id").get<std::string>());
      env_ok = true;
    });
    collect(problems, [&] {
      if (e.contains("horizon")) c.horizon = e.at("horizon").get<int>();
    });
    collect(problems, [&] {
      if (e.contains("memory_window")) c.memory_window = e.at("memory_window").get<int>();
    });
    if (env_ok) {
      collect(problems, [&] {
        c.params = params_from_json(c.env, e.contains("params") ? e.at("params") : json(nullptr));
      });
    }
  }

  if (!j.contains("agents") || !j.at("agents").is_object()) {
    problems.push_back("missing 'agents' object mapping roles to agent specs");
  } else {
    for (const auto& [role, spec] : j.at("agents").items())
      collect(problems, [&] { c.agents[role] = agent_spec_from_json(spec); });
  }

  collect(problems, [&] {
    if (!j.contains("seeds")) throw ConfigError("missing 'seeds'");
    const auto& s = j.at("seeds");
    if (s.is_array()) {
      for (const auto& x : s) {
        if (!x.is_number_integer() || (!x.is_number_unsigned() && x.get<std::int64_t>() < 0))
          throw ConfigError("seeds must be non-negative integers");
        c.seeds.push_back(x.get<std::uint64_t>());
      }
    } else if (s.is_object()) {
      const auto count = s.at("count").get<std::int64_t>();
      const auto first = s.contains("first") ? s.at("first").get<std::uint64_t>() : 1;
      for (std::int64_t i = 0; i < count; ++i) c.seeds.push_back(first + static_cast<std::uint64_t>(i));
    } else {
      throw ConfigError("seeds must be a list or {\"count\": N, \"first\": S}");
    }
  });

  collect(problems, [&] {
    if (j.contains("framing")) c.framing = j.at("framing").get<std::string>();
  });
  collect(problems, [&] {
    if (j.contains("info_sharing")) c.info_sharing = j.at("info_sharing").get<bool>();
  });
  collect(problems, [&] {
    if (j.contains("cognitive_reflection")) c.cognitive_reflection = j.at("cognitive_reflection").get<bool>();
  });
  collect(problems, [&] {
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
  });
  collect(problems, [&] {
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  });

  if (env_ok) collect(problems, [&] { validate(c); });
  if (!problems.empty()) throw ConfigError(problems);
  if (c.label.empty()) c.label = describe_roster(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read config '" + file.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + file.string() + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

json to_json(const ExperimentConfig& c) {
  json agents = json::object();
  for (const auto& [role, spec] : c.agents) agents[role] = to_json(spec);
  json seeds = json::array();
  for (auto s : c.seeds) seeds.push_back(s);
  return {
      {"label", c.label},
      {"environment",
       {{"id", std::string(to_string(c.env))},
        {"horizon", c.horizon},
        {"memory_window", c.memory_window},
        {"params", params_to_json(c.params)}}},
      {"agents", agents},
      {"seeds", seeds},
      {"framing", c.framing},
      {"info_sharing", c.info_sharing},
      {"cognitive_reflection", c.cognitive_reflection},
      {"output_dir", c.output_dir},
      {"workers", c.workers},
  };
}

void validate(const ExperimentConfig& c) {
  std::vector<std::string> problems;
  if (c.horizon < 1) problems.push_back("horizon must be >= 1");
  if (c.memory_window < 0) problems.push_back("memory_window must be >= 0");
  if (env_of(c.params) != c.env) problems.push_back("params do not belong to environment " + std::string(to_string(c.env)));
  else collect(problems, [&] { validate(sim_config(c, 0)); });
  if (c.seeds.empty()) problems.push_back("seed list is empty");
  if (std::set<std::uint64_t>(c.seeds.begin(), c.seeds.end()).size() != c.seeds.size())
    problems.push_back("seed list has duplicates");
  if (c.framing != "none" && c.framing != "PF" && c.framing != "NF")
    problems.push_back("framing must be PF, NF or none");
  if (c.framing != "none" && c.env != EnvId::nvp) problems.push_back("framing only applies to NVP");
  if (c.info_sharing && !multi_agent(c.env)) problems.push_back("info_sharing only applies to multi-agent environments");
  if (c.workers < 1) problems.push_back("workers must be >= 1");
  if (c.output_dir.empty()) problems.push_back("output_dir must not be empty");

  if (env_of(c.params) == c.env) {
    std::set<std::string> role_names;
    for (const auto& r : roles_of(c.params)) role_names.insert(r.name);
    for (const auto& [role, spec] : c.agents) {
      if (role != "*" && !role_names.count(role))
        problems.push_back("agents: no role '" + role + "' in " + std::string(to_string(c.env)));
      std::vector<std::string> p;
      validate(spec, c.env, p);
      for (auto& s : p) problems.push_back("agents." + role + ": " + s);
    }
    if (!c.agents.count("*"))
      for (const auto& r : role_names)
        if (!c.agents.count(r)) problems.push_back("agents: role '" + r + "' has no agent");
  }
  if (!problems.empty()) throw ConfigError(problems);
}

std::vector<std::pair<std::string, AgentSpec>> resolve_roster(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, AgentSpec>> out;
  for (const auto& r : roles_of(c.params)) {
    auto it = c.agents.find(r.name);
    if (it == c.agents.end()) it = c.agents.find("*");
    if (it == c.agents.end()) throw ConfigError("role '" + r.name + "' has no agent");
    out.emplace_back(r.name, it->second);
  }
  return out;
}

SimConfig sim_config(const ExperimentConfig& c, std::uint64_t seed) {
  SimConfig s;
  s.horizon = c.horizon;
  s.seed = seed;
  s.env = c.env;
  s.params = c.params;
  s.memory_window = c.memory_window;
  s.info_sharing = c.info_sharing;
  return s;
}

std::string describe(const AgentSpec& s) {
  std::string k(to_string(s.kind));
  switch (s.kind) {
    case AgentKind::base_stock: return k + "(S=" + std::to_string(s.level) + ")";
    case AgentKind::order_up_to: return s.safety ? k + "(safety=" + std::to_string(s.safety) + ")" : k;
    case AgentKind::mean_anchored: return k + "(alpha0=" + format_number(s.alpha0) + ")";
    case AgentKind::constant: return k + "(" + std::to_string(s.quantity) + ")";
    case AgentKind::random: return k + "(" + std::to_string(s.low) + ".." + std::to_string(s.high) + ")";
    default: return k;
  }
}

std::string describe_roster(const ExperimentConfig& c) {
  if (c.agents.size() == 1 && c.agents.count("*")) return describe(c.agents.at("*"));
  std::ostringstream s;
  bool first = true;
  for (const auto& [role, spec] : c.agents) {
    if (!first) s << " ";
    s << role << "=" << describe(spec);
    first = false;
  }
  return s.str();
}

}  // namespace invbench
