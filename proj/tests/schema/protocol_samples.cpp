// Prints every protocol message the harness would exchange for short
// episodes in each environment, one per line.
#include <iostream>

#include "invbench/agents/protocol.hpp"
#include "invbench/core/episode.hpp"
#include "invbench/env/environment.hpp"

using namespace invbench;

namespace {

class Recorder final : public Agent {
 public:
  explicit Recorder(int memory_window) : memory_window_(memory_window) {}

  void begin_episode(const EpisodeContext& ctx) override {
    HelloMsg hello;
    hello.env = ctx.env;
    hello.role = ctx.role;
    hello.channels = ctx.channels;
    hello.horizon = ctx.horizon;
    hello.info_sharing = ctx.info_sharing;
    hello.memory_window = memory_window_;
    std::cout << encode(hello) << "\n" << encode(ReadyMsg{}) << "\n";
  }

  Action decide(const Observation& obs, const MemoryWindow& memory) override {
    ObserveMsg msg{obs, {memory.entries().begin(), memory.entries().end()}, "context"};
    last_period_ = obs.period;
    Action a;
    for (const auto& c : obs.channels) a.orders[c] = obs.period;
    std::cout << encode(msg) << "\n" << encode(ActMsg{obs.period, a}) << "\n";
    return a;
  }

  void end_episode(const std::map<std::string, Fixed>& totals) override {
    std::cout << encode(EndMsg{last_period_, totals}) << "\n";
  }

 private:
  int memory_window_;
  int last_period_ = 0;
};

}  // namespace

int main() {
  for (EnvId env : {EnvId::nvp, EnvId::mpr, EnvId::bg, EnvId::twn, EnvId::scn}) {
    for (bool sharing : {false, true}) {
      if (sharing && (env == EnvId::nvp || env == EnvId::mpr)) continue;
      SimConfig config;
      config.env = env;
      config.horizon = 4;
      config.seed = 3;
      config.params = default_params(env);
      config.memory_window = 2;
      config.info_sharing = sharing;
      std::vector<std::unique_ptr<Recorder>> owned;
      std::vector<Agent*> agents;
      for (std::size_t i = 0; i < roles_of(config.params).size(); ++i) {
        owned.push_back(std::make_unique<Recorder>(config.memory_window));
        agents.push_back(owned.back().get());
      }
      run_episode(config, agents);
    }
  }
  std::cout << encode(ReadyMsg{kProtocolVersion}) << "\n";
}
