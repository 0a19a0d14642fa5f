#include "invbench/core/memory.hpp"

namespace invbench {

void MemoryWindow::push(Observation obs, Action act) {
  if (capacity_ == 0) return;
  if (entries_.size() == capacity_) entries_.pop_front();
  entries_.emplace_back(std::move(obs), std::move(act));
}

MemoryWindow push_memory(MemoryWindow window, Observation obs, Action act) {
  window.push(std::move(obs), std::move(act));
  return window;
}

}  // namespace invbench
