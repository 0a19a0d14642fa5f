#include "invbench/env/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace invbench {

std::int64_t EchelonState::in_transit() const {
  std::int64_t sum = 0;
  for (const auto& e : pipeline) sum += e.quantity;
  return sum;
}

void EchelonState::add_shipment(int current_period, int arrival_period, std::int64_t quantity, std::string channel) {
  if (quantity < 0) throw std::invalid_argument("negative shipment quantity");
  if (arrival_period <= current_period) throw std::invalid_argument("shipment must arrive after it is sent");
  pipeline.push_back({arrival_period, quantity, std::move(channel)});
}

std::map<std::string, std::int64_t> EchelonState::receive(int period) {
  std::map<std::string, std::int64_t> got;
  auto due = std::stable_partition(pipeline.begin(), pipeline.end(),
                                   [&](const PipelineEntry& e) { return e.arrival_period != period; });
  for (auto it = due; it != pipeline.end(); ++it) {
    got[it->channel] += it->quantity;
    on_hand += it->quantity;
  }
  pipeline.erase(due, pipeline.end());
  return got;
}

std::int64_t EchelonState::serve(std::int64_t incoming) {
  const std::int64_t owed = backlog + incoming;
  const std::int64_t shipped = std::min(on_hand, owed);
  on_hand -= shipped;
  backlog = owed - shipped;
  return shipped;
}

}  // namespace invbench
