#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "invbench/agents/transport.hpp"
#include "invbench/core/episode.hpp"

namespace invbench {

struct SessionOptions {
  std::chrono::milliseconds timeout{120'000};
  std::string framing = "none";
  bool cognitive_reflection = false;
  int memory_window = 0;
};

// Agent living behind a transport. begin_episode performs the hello/ready
// handshake, decide sends observe and waits for act, end_episode sends end.
// Every failure surfaces as ProtocolError.
class ExternalAgent final : public Agent {
 public:
  ExternalAgent(std::unique_ptr<Transport> transport, SessionOptions options);

  void begin_episode(const EpisodeContext& ctx) override;
  Action decide(const Observation& obs, const MemoryWindow& memory) override;
  void end_episode(const std::map<std::string, Fixed>& totals) override;

 private:
  std::unique_ptr<Transport> transport_;
  SessionOptions options_;
  int last_period_ = 0;
};

}  // namespace invbench
