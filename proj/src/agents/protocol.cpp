#include "invbench/agents/protocol.hpp"

#include <set>
#include <stdexcept>

#include "invbench/core/errors.hpp"
#include "invbench/env/params.hpp"

namespace invbench {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& detail) { throw ProtocolError(ProtocolErrc::schema_violation, detail); }

// Strict reader: every field is checked for type, unknown fields are errors.
class Reader {
 public:
  Reader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) schema(where_ + ": expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json& at(const char* key) {
    seen_.insert(key);
    if (!j_.contains(key)) schema(where_ + ": missing field '" + key + "'");
    return j_.at(key);
  }

  const json* maybe(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  std::int64_t integer(const char* key) { return as_integer(at(key), key); }
  std::string string(const char* key) {
    const auto& v = at(key);
    if (!v.is_string()) schema(where_ + ": field '" + key + "' must be a string");
    return v.get<std::string>();
  }
  bool boolean(const char* key) {
    const auto& v = at(key);
    if (!v.is_boolean()) schema(where_ + ": field '" + key + "' must be a boolean");
    return v.get<bool>();
  }

  std::int64_t as_integer(const json& v, const std::string& what) const {
    if (!v.is_number_integer()) schema(where_ + ": '" + what + "' must be an integer");
    return v.get<std::int64_t>();
  }

  void finish() const {
    for (const auto& [k, _] : j_.items())
      if (!seen_.count(k)) schema(where_ + ": unknown field '" + k + "'");
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

Fixed fixed_from(const json& v, const std::string& what) {
  if (!v.is_number()) schema(what + " must be a number");
  try {
    if (v.is_number_integer()) return Fixed::from_int(v.get<std::int64_t>());
    return Fixed::from_double(v.get<double>());
  } catch (const std::exception& e) {
    schema(what + ": " + e.what());
  }
}

json process_to_json(const StochasticProcess& p) {
  json j = p;
  j["stream_id"] = p.stream_id;
  j["minimum"] = p.minimum;
  return j;
}

StochasticProcess process_from(const json& v) {
  if (!v.is_object()) schema("process must be an object");
  json law = v;
  Reader r(v, "process");
  const auto stream = r.string("stream_id");
  const auto minimum = r.integer("minimum");
  law.erase("stream_id");
  law.erase("minimum");
  try {
    return process_from_json(law, stream, minimum);
  } catch (const std::exception& e) {
    schema(std::string("process: ") + e.what());
  }
}

json int_map(const std::map<std::string, std::int64_t>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

std::vector<std::string> string_list(const json& v, const std::string& what) {
  if (!v.is_array()) schema(what + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) schema(what + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::map<std::string, Fixed> fixed_map(const json& v, const std::string& what) {
  if (!v.is_object()) schema(what + " must be an object");
  std::map<std::string, Fixed> out;
  for (const auto& [k, x] : v.items()) out[k] = fixed_from(x, what + "." + k);
  return out;
}

EnvId env_from(const std::string& s) {
  try {
    return env_id_from_string(s);
  } catch (const std::exception&) {
    schema("unknown env_id '" + s + "'");
  }
}

int period_of(const json& v) {
  if (!v.is_number_integer()) schema("'period' must be an integer");
  return v.get<int>();
}

}  // namespace

json fixed_to_json(Fixed f) {
  if (f.raw() % Fixed::kScale == 0) return json(f.raw() / Fixed::kScale);
  return json(f.to_double());
}

json action_to_json(const Action& a) { return json{{"orders", int_map(a.orders)}}; }

Action action_from_json(const json& j) {
  Reader r(j, "act");
  const auto& orders = r.at("orders");
  if (!orders.is_object()) schema("act: 'orders' must be an object");
  Action a;
  for (const auto& [ch, q] : orders.items()) a.orders[ch] = r.as_integer(q, "orders." + ch);
  r.finish();
  return a;
}

json observation_to_json(const Observation& o) {
  json j;
  j["env_id"] = std::string(to_string(o.env));
  j["period"] = o.period;
  j["horizon"] = o.horizon;
  j["role_id"] = o.role;
  j["channels"] = o.channels;
  j["on_hand"] = o.on_hand;
  j["backlog"] = o.backlog;
  json pipe = json::array();
  for (const auto& p : o.pipeline)
    pipe.push_back({{"arrival_period", p.arrival_period}, {"quantity", p.quantity}, {"channel", p.channel}});
  j["pipeline"] = pipe;
  j["outstanding"] = o.outstanding;
  j["last_demand"] = o.last_demand ? json(*o.last_demand) : json(nullptr);
  j["demand_history"] = o.demand_history;
  json costs = json::object();
  for (const auto& [k, v] : o.costs) costs[k] = fixed_to_json(v);
  j["costs"] = costs;
  j["lead_times"] = o.lead_times;
  j["demand_process"] = o.demand_process ? process_to_json(*o.demand_process) : json(nullptr);
  j["lead_time_process"] = o.lead_time_process ? process_to_json(*o.lead_time_process) : json(nullptr);
  if (o.partners) {
    json ps = json::array();
    for (const auto& p : *o.partners)
      ps.push_back({{"role_id", p.role}, {"on_hand", p.on_hand}, {"backlog", p.backlog}, {"last_order", p.last_order}});
    j["partners"] = ps;
  } else {
    j["partners"] = nullptr;
  }
  return j;
}

Observation observation_from_json(const json& j) {
  Reader r(j, "observation");
  Observation o;
  o.env = env_from(r.string("env_id"));
  o.period = static_cast<int>(r.integer("period"));
  o.horizon = static_cast<int>(r.integer("horizon"));
  o.role = r.string("role_id");
  o.channels = string_list(r.at("channels"), "channels");
  o.on_hand = r.integer("on_hand");
  o.backlog = r.integer("backlog");
  const auto& pipe = r.at("pipeline");
  if (!pipe.is_array()) schema("pipeline must be an array");
  for (const auto& p : pipe) {
    Reader pr(p, "pipeline entry");
    PipelineEntry e;
    e.arrival_period = static_cast<int>(pr.integer("arrival_period"));
    e.quantity = pr.integer("quantity");
    e.channel = pr.string("channel");
    pr.finish();
    o.pipeline.push_back(std::move(e));
  }
  o.outstanding = r.integer("outstanding");
  if (const auto* v = r.maybe("last_demand")) o.last_demand = r.as_integer(*v, "last_demand");
  const auto& hist = r.at("demand_history");
  if (!hist.is_array()) schema("demand_history must be an array");
  for (const auto& d : hist) o.demand_history.push_back(r.as_integer(d, "demand_history"));
  o.costs = fixed_map(r.at("costs"), "costs");
  const auto& leads = r.at("lead_times");
  if (!leads.is_object()) schema("lead_times must be an object");
  for (const auto& [k, v] : leads.items()) o.lead_times[k] = static_cast<int>(r.as_integer(v, "lead_times." + k));
  if (const auto* v = r.maybe("demand_process")) o.demand_process = process_from(*v);
  if (const auto* v = r.maybe("lead_time_process")) o.lead_time_process = process_from(*v);
  if (const auto* v = r.maybe("partners")) {
    if (!v->is_array()) schema("partners must be an array");
    std::vector<PartnerState> ps;
    for (const auto& p : *v) {
      Reader pr(p, "partner");
      PartnerState s;
      s.role = pr.string("role_id");
      s.on_hand = pr.integer("on_hand");
      s.backlog = pr.integer("backlog");
      s.last_order = pr.integer("last_order");
      pr.finish();
      ps.push_back(std::move(s));
    }
    o.partners = std::move(ps);
  }
  r.finish();
  return o;
}

std::string_view message_type(const Message& m) {
  static constexpr std::string_view names[] = {"hello", "ready", "observe", "act", "end"};
  return names[m.index()];
}

std::string encode(const Message& m) {
  json payload;
  int period = 0;
  std::visit(
      [&](const auto& msg) {
        using T = std::decay_t<decltype(msg)>;
        if constexpr (std::is_same_v<T, HelloMsg>) {
          payload = {{"protocol_version", msg.protocol_version},
                     {"env_id", std::string(to_string(msg.env))},
                     {"role_id", msg.role},
                     {"channels", msg.channels},
                     {"horizon", msg.horizon},
                     {"framing", msg.framing},
                     {"cognitive_reflection", msg.cognitive_reflection},
                     {"info_sharing", msg.info_sharing},
                     {"memory_window", msg.memory_window}};
        } else if constexpr (std::is_same_v<T, ReadyMsg>) {
          payload = json::object();
          if (msg.protocol_version) payload["protocol_version"] = *msg.protocol_version;
        } else if constexpr (std::is_same_v<T, ObserveMsg>) {
          period = msg.observation.period;
          json mem = json::array();
          for (const auto& [o, a] : msg.memory)
            mem.push_back({{"observation", observation_to_json(o)}, {"action", action_to_json(a)}});
          payload = {{"observation", observation_to_json(msg.observation)}, {"memory", mem}, {"context", msg.context}};
        } else if constexpr (std::is_same_v<T, ActMsg>) {
          period = msg.period;
          payload = action_to_json(msg.action);
        } else {
          period = msg.period;
          json totals = json::object();
          for (const auto& [k, v] : msg.totals) totals[k] = fixed_to_json(v);
          payload = {{"totals", totals}};
        }
      },
      m);
  json j = {{"type", std::string(message_type(m))}, {"period", period}, {"payload", payload}};
  return j.dump();
}

Message decode(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ProtocolError(ProtocolErrc::malformed_json, e.what());
  }
  Reader r(j, "message");
  const auto type = r.string("type");
  const int period = period_of(r.at("period"));
  const auto& payload = r.at("payload");
  r.finish();

  if (type == "hello") {
    Reader p(payload, "hello");
    HelloMsg h;
    h.protocol_version = static_cast<int>(p.integer("protocol_version"));
    h.env = env_from(p.string("env_id"));
    h.role = p.string("role_id");
    h.channels = string_list(p.at("channels"), "channels");
    h.horizon = static_cast<int>(p.integer("horizon"));
    h.framing = p.string("framing");
    h.cognitive_reflection = p.boolean("cognitive_reflection");
    h.info_sharing = p.boolean("info_sharing");
    h.memory_window = static_cast<int>(p.integer("memory_window"));
    p.finish();
    return h;
  }
  if (type == "ready") {
    Reader p(payload, "ready");
    ReadyMsg m;
    if (const auto* v = p.maybe("protocol_version")) m.protocol_version = static_cast<int>(p.as_integer(*v, "protocol_version"));
    p.finish();
    return m;
  }
  if (type == "observe") {
    Reader p(payload, "observe");
    ObserveMsg m;
    m.observation = observation_from_json(p.at("observation"));
    const auto& mem = p.at("memory");
    if (!mem.is_array()) schema("memory must be an array");
    for (const auto& e : mem) {
      Reader er(e, "memory entry");
      auto o = observation_from_json(er.at("observation"));
      auto a = action_from_json(er.at("action"));
      er.finish();
      m.memory.emplace_back(std::move(o), std::move(a));
    }
    m.context = p.string("context");
    p.finish();
    if (period != m.observation.period) schema("observe: period does not match the observation");
    return m;
  }
  if (type == "act") return ActMsg{period, action_from_json(payload)};
  if (type == "end") {
    Reader p(payload, "end");
    EndMsg m{period, fixed_map(p.at("totals"), "totals")};
    p.finish();
    return m;
  }
  schema("unknown message type '" + type + "'");
}

}  // namespace invbench
