#pragma once

#include <cstddef>
#include <deque>
#include <utility>

#include "invbench/core/types.hpp"

namespace invbench {

// The last k (observation, action) pairs of one agent, newest last.
class MemoryWindow {
 public:
  using Entry = std::pair<Observation, Action>;

  explicit MemoryWindow(std::size_t capacity = 0) : capacity_(capacity) {}

  void push(Observation obs, Action act);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::deque<Entry>& entries() const { return entries_; }

  bool operator==(const MemoryWindow&) const = default;

 private:
  std::size_t capacity_;
  std::deque<Entry> entries_;
};

MemoryWindow push_memory(MemoryWindow window, Observation obs, Action act);

}  // namespace invbench
