#include "invbench/agents/context.hpp"

#include <sstream>

namespace invbench {

namespace {

std::string orders_text(const Action& a) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [ch, q] : a.orders) {
    if (!first) s << ", ";
    s << q << " via " << ch;
    first = false;
  }
  return s.str();
}

const char* role_story(EnvId env) {
  switch (env) {
    case EnvId::nvp:
      return "You sell a perishable product. Each round you order stock before demand is known; "
             "unsold units are worthless at the end of the round and unmet demand is lost.";
    case EnvId::mpr:
      return "You manage one stocking point over several periods. Orders arrive after a random "
             "lead time and unmet demand is backordered.";
    case EnvId::bg:
      return "You are one stage of a four-stage serial supply chain. You fill orders from the stage "
             "below and order from the stage above; shipments take a fixed lead time.";
    case EnvId::twn:
      return "You are part of a network with a central hub and several mini warehouses. Orders "
             "travel from the manufacturer to the hub, from the hub to the minis, or directly "
             "to a mini.";
    case EnvId::scn:
      return "You stock one retail site and can reorder through a regular channel or a faster, "
             "more expensive expedited channel.";
  }
  return "";
}

}  // namespace

std::string render_context(const Observation& obs, const MemoryWindow& memory) {
  std::ostringstream s;
  s << role_story(obs.env) << "\n";
  s << "Role: " << obs.role << ". Period " << obs.period << " of " << obs.horizon << ".\n";
  if (!obs.costs.empty()) {
    s << "Unit costs:";
    for (const auto& [k, v] : obs.costs) s << " " << k << "=" << v.to_string();
    s << ".\n";
  }
  if (obs.demand_process) s << "Demand per period: " << describe(*obs.demand_process) << ".\n";
  if (obs.lead_time_process) s << "Lead time per order: " << describe(*obs.lead_time_process) << ".\n";
  for (const auto& [ch, l] : obs.lead_times) s << "Lead time via " << ch << ": " << l << " periods.\n";
  if (obs.env != EnvId::nvp) {
    s << "On hand: " << obs.on_hand << ". Backlog: " << obs.backlog << ". Ordered but not yet received: "
      << obs.outstanding << ".\n";
    for (const auto& p : obs.pipeline)
      s << "In transit: " << p.quantity << " units via " << p.channel << " arriving in period " << p.arrival_period
        << ".\n";
  }
  if (obs.last_demand) s << "Demand last period: " << *obs.last_demand << ".\n";
  if (!obs.demand_history.empty()) {
    s << "Recent demand:";
    for (auto d : obs.demand_history) s << " " << d;
    s << ".\n";
  }
  if (obs.partners) {
    for (const auto& p : *obs.partners)
      s << "Partner " << p.role << ": on hand " << p.on_hand << ", backlog " << p.backlog << ", last order "
        << p.last_order << ".\n";
  }
  if (!memory.empty()) {
    s << "Your recent decisions:\n";
    for (const auto& [o, a] : memory.entries()) {
      s << "  period " << o.period << ": ordered " << orders_text(a);
      if (o.env != EnvId::nvp) s << " with on hand " << o.on_hand << " and backlog " << o.backlog;
      s << ".\n";
    }
  }
  s << "Reply with a non-negative integer order for each channel:";
  for (const auto& ch : obs.channels) s << " " << ch;
  s << ".";
  return s.str();
}

}  // namespace invbench
