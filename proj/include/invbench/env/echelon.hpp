#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invbench/core/types.hpp"

namespace invbench {

// Inventory of one supply-chain node. on_hand and backlog are both
// non-negative; the inventory level is on_hand - backlog.
struct EchelonState {
  std::int64_t on_hand = 0;
  std::int64_t backlog = 0;
  std::vector<PipelineEntry> pipeline;

  std::int64_t level() const { return on_hand - backlog; }
  std::int64_t in_transit() const;

  // Appends an in-transit shipment. Throws std::invalid_argument on a
  // negative quantity or an arrival not after `current_period`.
  void add_shipment(int current_period, int arrival_period, std::int64_t quantity, std::string channel);

  // Moves entries due at `period` into on_hand; returns units by channel.
  std::map<std::string, std::int64_t> receive(int period);

  // Serves backlog plus `incoming` from on_hand; the rest joins the backlog.
  // Returns units shipped.
  std::int64_t serve(std::int64_t incoming);

  bool operator==(const EchelonState&) const = default;
};

}  // namespace invbench
