#include "invbench/harness/log_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "invbench/agents/protocol.hpp"

namespace invbench {

using nlohmann::json;

namespace {

Fixed fixed_of(const json& v) {
  if (v.is_number_integer()) return Fixed::from_int(v.get<std::int64_t>());
  return Fixed::from_double(v.get<double>());
}

}  // namespace

json step_to_json(const StepRecord& s) {
  json nodes = json::array();
  for (const auto& n : s.nodes) {
    json j = {{"role", n.role},         {"on_hand_begin", n.on_hand_begin}, {"received", n.received},
              {"incoming", n.incoming}, {"shipped", n.shipped},             {"on_hand", n.on_hand},
              {"backlog", n.backlog},   {"purchases", n.purchases},         {"cost", fixed_to_json(n.cost)}};
    if (n.profit) j["profit"] = fixed_to_json(*n.profit);
    nodes.push_back(std::move(j));
  }
  json obs = json::object();
  for (const auto& [role, o] : s.observations) obs[role] = observation_to_json(o);
  json acts = json::object();
  for (const auto& [role, a] : s.actions) acts[role] = a.orders;
  json places = json::array();
  for (const auto& p : s.placements) {
    json j = {{"role", p.role}, {"channel", p.channel}, {"quantity", p.quantity}, {"placed", p.placed}};
    j["arrival"] = p.arrival ? json(*p.arrival) : json(nullptr);
    j["slot"] = p.slot ? json(*p.slot) : json(nullptr);
    places.push_back(std::move(j));
  }
  return {{"period", s.period},    {"demand", s.demand},     {"nodes", nodes},
          {"observations", obs},   {"actions", acts},        {"placements", places},
          {"total_cost", fixed_to_json(s.total_cost())}};
}

StepRecord step_from_json(const json& j) {
  try {
    StepRecord s;
    s.period = j.at("period").get<int>();
    s.demand = j.at("demand").get<std::map<std::string, std::int64_t>>();
    for (const auto& n : j.at("nodes")) {
      NodeRecord r;
      r.role = n.at("role").get<std::string>();
      r.on_hand_begin = n.at("on_hand_begin").get<std::int64_t>();
      r.received = n.at("received").get<std::map<std::string, std::int64_t>>();
      r.incoming = n.at("incoming").get<std::int64_t>();
      r.shipped = n.at("shipped").get<std::int64_t>();
      r.on_hand = n.at("on_hand").get<std::int64_t>();
      r.backlog = n.at("backlog").get<std::int64_t>();
      r.purchases = n.at("purchases").get<std::map<std::string, std::int64_t>>();
      r.cost = fixed_of(n.at("cost"));
      if (n.contains("profit")) r.profit = fixed_of(n.at("profit"));
      s.nodes.push_back(std::move(r));
    }
    for (const auto& [role, o] : j.at("observations").items()) s.observations[role] = observation_from_json(o);
    for (const auto& [role, a] : j.at("actions").items())
      s.actions[role] = Action{a.get<std::map<std::string, std::int64_t>>()};
    for (const auto& p : j.at("placements")) {
      Placement pl;
      pl.role = p.at("role").get<std::string>();
      pl.channel = p.at("channel").get<std::string>();
      pl.quantity = p.at("quantity").get<std::int64_t>();
      pl.placed = p.at("placed").get<int>();
      if (!p.at("arrival").is_null()) pl.arrival = p.at("arrival").get<int>();
      if (!p.at("slot").is_null()) pl.slot = p.at("slot").get<int>();
      s.placements.push_back(std::move(pl));
    }
    return s;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("bad log record: ") + e.what());
  }
}

void write_log_jsonl(const EpisodeLog& log, std::ostream& out) {
  for (const auto& s : log.steps) out << step_to_json(s).dump() << '\n';
}

EpisodeLog read_log_jsonl(std::istream& in, const SimConfig& config) {
  EpisodeLog log;
  log.config = config;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(std::string("bad log line: ") + e.what());
    }
    log.steps.push_back(step_from_json(j));
  }
  if (log.steps.empty()) throw std::runtime_error("log has no periods");
  for (const auto& n : log.steps.front().nodes) {
    log.roles.push_back(n.role);
    log.totals[n.role] = Fixed{};
  }
  for (const auto& s : log.steps)
    for (const auto& n : s.nodes) log.totals[n.role] += n.cost;
  return log;
}

}  // namespace invbench
