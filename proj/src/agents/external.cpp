#include "invbench/agents/external.hpp"

#include "invbench/agents/context.hpp"
#include "invbench/agents/protocol.hpp"
#include "invbench/core/errors.hpp"

namespace invbench {

ExternalAgent::ExternalAgent(std::unique_ptr<Transport> transport, SessionOptions options)
    : transport_(std::move(transport)), options_(std::move(options)) {}

void ExternalAgent::begin_episode(const EpisodeContext& ctx) {
  HelloMsg hello;
  hello.env = ctx.env;
  hello.role = ctx.role;
  hello.channels = ctx.channels;
  hello.horizon = ctx.horizon;
  hello.framing = options_.framing;
  hello.cognitive_reflection = options_.cognitive_reflection;
  hello.info_sharing = ctx.info_sharing;
  hello.memory_window = options_.memory_window;
  const auto reply = decode(transport_->request(encode(hello), options_.timeout));
  const auto* ready = std::get_if<ReadyMsg>(&reply);
  if (ready == nullptr)
    throw ProtocolError(ProtocolErrc::schema_violation,
                        "expected ready, got " + std::string(message_type(reply)));
  if (ready->protocol_version && *ready->protocol_version != kProtocolVersion)
    throw ProtocolError(ProtocolErrc::version_mismatch,
                        "agent speaks protocol " + std::to_string(*ready->protocol_version) + ", expected " +
                            std::to_string(kProtocolVersion));
  last_period_ = 0;
}

Action ExternalAgent::decide(const Observation& obs, const MemoryWindow& memory) {
  ObserveMsg msg;
  msg.observation = obs;
  msg.memory.assign(memory.entries().begin(), memory.entries().end());
  msg.context = render_context(obs, memory);
  const auto reply = decode(transport_->request(encode(msg), options_.timeout));
  const auto* act = std::get_if<ActMsg>(&reply);
  if (act == nullptr)
    throw ProtocolError(ProtocolErrc::schema_violation, "expected act, got " + std::string(message_type(reply)));
  if (act->period != obs.period)
    throw ProtocolError(ProtocolErrc::schema_violation, "act for period " + std::to_string(act->period) +
                                                            " while period " + std::to_string(obs.period) +
                                                            " was observed");
  last_period_ = obs.period;
  return act->action;
}

void ExternalAgent::end_episode(const std::map<std::string, Fixed>& totals) {
  transport_->notify(encode(EndMsg{last_period_, totals}));
}

}  // namespace invbench
