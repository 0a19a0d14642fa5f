#include "invbench/agents/agent_spec.hpp"

#include <array>
#include <set>

#include "invbench/agents/scripted.hpp"
#include "invbench/core/errors.hpp"

namespace invbench {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 9> kKindNames = {
    "optimal_nvp", "expost_replay", "base_stock", "order_up_to", "mean_anchored",
    "demand_chaser", "constant", "random", "external",
};

}  // namespace

std::string_view to_string(AgentKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

AgentKind agent_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<AgentKind>(i);
  throw ConfigError("unknown agent kind '" + std::string(name) + "'");
}

void validate(const AgentSpec& s, std::vector<std::string>& problems) {
  const std::string k(to_string(s.kind));
  switch (s.kind) {
    case AgentKind::base_stock:
      if (s.level < 0) problems.push_back(k + ": S must be >= 0");
      break;
    case AgentKind::order_up_to:
      if (s.safety < 0) problems.push_back(k + ": safety must be >= 0");
      break;
    case AgentKind::mean_anchored:
      if (!(s.alpha0 >= 0.0 && s.alpha0 <= 1.5)) problems.push_back(k + ": alpha0 must lie in [0, 1.5]");
      break;
    case AgentKind::constant:
      if (s.quantity < 0) problems.push_back(k + ": quantity must be >= 0");
      break;
    case AgentKind::random:
      if (s.low < 0 || s.high < s.low) problems.push_back(k + ": need 0 <= low <= high");
      break;
    case AgentKind::expost_replay:
      for (auto q : s.orders)
        if (q < 0) {
          problems.push_back(k + ": orders must be >= 0");
          break;
        }
      break;
    case AgentKind::external:
      if (!s.endpoint) {
        problems.push_back(k + ": needs a command or a url");
      } else {
        if (s.endpoint->command.empty() == s.endpoint->url.empty())
          problems.push_back(k + ": give exactly one of command and url");
        if (s.endpoint->timeout.count() <= 0) problems.push_back(k + ": timeout_ms must be > 0");
      }
      break;
    case AgentKind::optimal_nvp:
    case AgentKind::demand_chaser:
      break;
  }
}

void validate(const AgentSpec& s, EnvId env, std::vector<std::string>& problems) {
  validate(s, problems);
  const std::string k(to_string(s.kind));
  if ((s.kind == AgentKind::optimal_nvp || s.kind == AgentKind::mean_anchored) && env != EnvId::nvp)
    problems.push_back(k + " only applies to NVP");
  if (s.kind == AgentKind::expost_replay && s.orders.empty() && env != EnvId::mpr)
    problems.push_back(k + " without an order list only applies to MPR");
}

AgentSpec agent_spec_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("agent spec must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ConfigError("agent spec needs a string 'kind'");
  AgentSpec s;
  s.kind = agent_kind_from_string(j.at("kind").get<std::string>());

  std::set<std::string> allowed = {"kind"};
  auto integer = [&](const char* key, std::int64_t& out) {
    allowed.insert(key);
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_integer()) throw ConfigError(std::string("agent '") + key + "' must be an integer");
    out = j.at(key).get<std::int64_t>();
  };
  switch (s.kind) {
    case AgentKind::base_stock:
      integer("S", s.level);
      break;
    case AgentKind::order_up_to:
      integer("safety", s.safety);
      break;
    case AgentKind::mean_anchored:
      allowed.insert("alpha0");
      if (!j.contains("alpha0") || !j.at("alpha0").is_number()) throw ConfigError("mean_anchored needs a numeric alpha0");
      s.alpha0 = j.at("alpha0").get<double>();
      break;
    case AgentKind::constant:
      integer("quantity", s.quantity);
      break;
    case AgentKind::random:
      integer("low", s.low);
      integer("high", s.high);
      break;
    case AgentKind::expost_replay:
      allowed.insert("orders");
      if (j.contains("orders")) {
        for (const auto& q : j.at("orders")) {
          if (!q.is_number_integer()) throw ConfigError("expost_replay orders must be integers");
          s.orders.push_back(q.get<std::int64_t>());
        }
      }
      break;
    case AgentKind::external: {
      ExternalEndpoint e;
      allowed.insert({"command", "url", "timeout_ms"});
      if (j.contains("command")) {
        for (const auto& a : j.at("command")) {
          if (!a.is_string()) throw ConfigError("external command must be a list of strings");
          e.command.push_back(a.get<std::string>());
        }
      }
      if (j.contains("url")) e.url = j.at("url").get<std::string>();
      std::int64_t ms = e.timeout.count();
      integer("timeout_ms", ms);
      e.timeout = std::chrono::milliseconds(ms);
      s.endpoint = std::move(e);
      break;
    }
    case AgentKind::optimal_nvp:
    case AgentKind::demand_chaser:
      break;
  }
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ConfigError("agent " + std::string(to_string(s.kind)) + ": unknown field '" + key + "'");
  return s;
}

json to_json(const AgentSpec& s) {
  json j = {{"kind", std::string(to_string(s.kind))}};
  switch (s.kind) {
    case AgentKind::base_stock: j["S"] = s.level; break;
    case AgentKind::order_up_to: j["safety"] = s.safety; break;
    case AgentKind::mean_anchored: j["alpha0"] = s.alpha0; break;
    case AgentKind::constant: j["quantity"] = s.quantity; break;
    case AgentKind::random:
      j["low"] = s.low;
      j["high"] = s.high;
      break;
    case AgentKind::expost_replay:
      if (!s.orders.empty()) j["orders"] = s.orders;
      break;
    case AgentKind::external:
      if (s.endpoint) {
        if (!s.endpoint->command.empty()) j["command"] = s.endpoint->command;
        if (!s.endpoint->url.empty()) j["url"] = s.endpoint->url;
        j["timeout_ms"] = s.endpoint->timeout.count();
      }
      break;
    case AgentKind::optimal_nvp:
    case AgentKind::demand_chaser:
      break;
  }
  return j;
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const AgentBinding& binding) {
  std::vector<std::string> problems;
  validate(spec, binding.config.env, problems);
  if (!problems.empty()) throw ConfigError(problems);
  switch (spec.kind) {
    case AgentKind::optimal_nvp: return std::make_unique<OptimalNewsvendorAgent>();
    case AgentKind::expost_replay: {
      std::optional<MprParams> params;
      if (const auto* p = std::get_if<MprParams>(&binding.config.params)) params = *p;
      return std::make_unique<ExPostReplayAgent>(spec.orders, params);
    }
    case AgentKind::base_stock: return std::make_unique<BaseStockAgent>(spec.level);
    case AgentKind::order_up_to: return std::make_unique<OrderUpToAgent>(spec.safety);
    case AgentKind::mean_anchored: return std::make_unique<MeanAnchoredAgent>(spec.alpha0);
    case AgentKind::demand_chaser: return std::make_unique<DemandChaserAgent>();
    case AgentKind::constant: return std::make_unique<ConstantAgent>(spec.quantity);
    case AgentKind::random: return std::make_unique<RandomAgent>(spec.low, spec.high);
    case AgentKind::external: {
      SessionOptions opts;
      opts.timeout = spec.endpoint->timeout;
      opts.framing = binding.framing;
      opts.cognitive_reflection = binding.cognitive_reflection;
      opts.memory_window = binding.config.memory_window;
      std::unique_ptr<Transport> t;
      try {
        if (!spec.endpoint->command.empty())
          t = std::make_unique<SubprocessTransport>(spec.endpoint->command);
        else
          t = std::make_unique<HttpTransport>(spec.endpoint->url);
      } catch (const ProtocolError& e) {
        throw ConfigError(std::string("external agent: ") + e.what());
      }
      return std::make_unique<ExternalAgent>(std::move(t), opts);
    }
  }
  throw ConfigError("unknown agent kind");
}

}  // namespace invbench
