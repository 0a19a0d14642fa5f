#include <doctest.h>
#include <httplib.h>

#include <thread>

#include "helpers.hpp"
#include "invbench/agents/agent_spec.hpp"
#include "invbench/agents/context.hpp"
#include "invbench/agents/external.hpp"
#include "invbench/agents/protocol.hpp"
#include "invbench/agents/transport.hpp"
#include "invbench/core/errors.hpp"

using namespace invbench;
using nlohmann::json;

namespace {

Observation nvp_observation(int period) {
  Observation o;
  o.env = EnvId::nvp;
  o.period = period;
  o.horizon = 20;
  o.role = "newsvendor";
  o.channels = {"order"};
  o.demand_process = make_demand(UniformInt{0, 300});
  o.costs = {{"price", Fixed::from_int(12)}, {"cost", Fixed::from_int(3)}};
  return o;
}

Observation bg_observation() {
  Observation o;
  o.env = EnvId::bg;
  o.period = 3;
  o.horizon = 36;
  o.role = "wholesaler";
  o.channels = {"upstream"};
  o.on_hand = 10;
  o.backlog = 2;
  o.outstanding = 4;
  o.last_demand = 6;
  o.lead_times = {{"upstream", 2}};
  o.pipeline = {{4, 4, "upstream"}};
  o.costs = {{"holding", Fixed::from_double(0.5)}, {"backorder", Fixed::from_int(1)}};
  return o;
}

std::unique_ptr<Agent> echo(const std::string& mode, std::chrono::milliseconds timeout = std::chrono::seconds(10)) {
  SessionOptions opts;
  opts.timeout = timeout;
  return std::make_unique<ExternalAgent>(std::make_unique<SubprocessTransport>(std::vector<std::string>{ECHO_AGENT_PATH, mode}),
                                         opts);
}

ProtocolErrc abort_code(EnvId env, const std::string& mode, std::chrono::milliseconds timeout = std::chrono::seconds(10)) {
  const auto config = testing::config_for(env, 4, 1);
  try {
    testing::run_with(config, [&](std::size_t) { return echo(mode, timeout); });
  } catch (const EpisodeAborted& e) {
    return e.code();
  }
  FAIL("episode did not abort");
  return ProtocolErrc::transport_failure;
}

ProtocolErrc decode_code(const std::string& line) {
  try {
    decode(line);
  } catch (const ProtocolError& e) {
    return e.code();
  }
  FAIL("decoded: " << line);
  return ProtocolErrc::transport_failure;
}

}  // namespace

TEST_SUITE("scripted agents") {
  const MemoryWindow empty(0);

  TEST_CASE("optimal newsvendor orders q*") {
    OptimalNewsvendorAgent a;
    CHECK(a.decide(nvp_observation(1), empty) == single_order("order", 225));
  }

  TEST_CASE("mean anchored at alpha 1 orders the mean, at 0 orders q*") {
    MeanAnchoredAgent full(1.0), none(0.0), half(0.5);
    for (int t = 1; t <= 5; ++t) {
      CHECK(full.decide(nvp_observation(t), empty) == single_order("order", 150));
      CHECK(none.decide(nvp_observation(t), empty) == single_order("order", 225));
    }
    // 187.5 alternates so cumulative orders stay at round(t * 187.5).
    std::int64_t total = 0;
    for (int t = 1; t <= 10; ++t) total += half.decide(nvp_observation(t), empty).total();
    CHECK(total == 1875);
    CHECK(MeanAnchoredAgent::target_raw(nvp_observation(1), 0.25) == 2'062'500);
  }

  TEST_CASE("base stock tops up the inventory position") {
    Observation o = bg_observation();
    o.on_hand = 12;
    o.backlog = 0;
    o.outstanding = 0;
    BaseStockAgent a(20);
    CHECK(a.decide(o, empty) == single_order("upstream", 8));
    o.on_hand = 25;
    CHECK(a.decide(o, empty) == single_order("upstream", 0));
  }

  TEST_CASE("order up to uses lead time and last demand") {
    // IP = 10 - 2 + 4 = 12, target (2 + 1) * 6 + 1 = 19.
    OrderUpToAgent a(1);
    CHECK(a.decide(bg_observation(), empty) == single_order("upstream", 7));
  }

  TEST_CASE("demand chaser, constant, primary channel") {
    DemandChaserAgent d;
    CHECK(d.decide(bg_observation(), empty) == single_order("upstream", 6));
    CHECK(d.decide(nvp_observation(1), empty) == single_order("order", 150));
    ConstantAgent c(4);
    Observation two = bg_observation();
    two.channels = {"express", "regular"};
    CHECK(c.decide(two, empty).orders == std::map<std::string, std::int64_t>{{"express", 0}, {"regular", 4}});
    CHECK(primary_channel({"to_r1", "hub"}) == "hub");
    CHECK(primary_channel({"b", "a"}) == "b");
  }

  TEST_CASE("random agent is reproducible per seed and role") {
    auto config = testing::config_for(EnvId::bg, 20, 7);
    auto make = [](std::size_t) { return std::make_unique<RandomAgent>(0, 10); };
    const auto a = testing::run_with(config, make);
    const auto b = testing::run_with(config, make);
    CHECK(a == b);
    config.seed = 8;
    CHECK_FALSE(testing::run_with(config, make) == a);
  }
}

TEST_SUITE("agent specs") {
  TEST_CASE("json round trip") {
    for (const char* text : {R"({"kind": "base_stock", "S": 20})", R"({"kind": "mean_anchored", "alpha0": 0.5})",
                             R"({"kind": "random", "low": 1, "high": 9})", R"({"kind": "expost_replay", "orders": [1, 2]})",
                             R"({"kind": "external", "command": ["python3", "agent.py"], "timeout_ms": 500})",
                             R"({"kind": "external", "url": "http://127.0.0.1:8080/agent"})"}) {
      const auto spec = agent_spec_from_json(json::parse(text));
      CHECK(agent_spec_from_json(to_json(spec)) == spec);
    }
    const auto ext = agent_spec_from_json(json::parse(R"({"kind": "external", "command": ["x"], "timeout_ms": 500})"));
    CHECK(ext.endpoint->timeout == std::chrono::milliseconds(500));
  }

  TEST_CASE("invalid specs are rejected") {
    for (const char* text : {R"({"kind": "warp_drive"})", R"({"kind": "base_stock", "S": -1})",
                             R"({"kind": "mean_anchored", "alpha0": 1.6})", R"({"kind": "random", "low": 5, "high": 1})",
                             R"({"kind": "external"})", R"({"kind": "external", "command": ["x"], "url": "http://a"})",
                             R"({"kind": "base_stock", "S": 3, "colour": "red"})"}) {
      CAPTURE(text);
      bool threw = false;
      try {
        std::vector<std::string> problems;
        validate(agent_spec_from_json(json::parse(text)), problems);
        threw = !problems.empty();
      } catch (const ConfigError&) {
        threw = true;
      }
      CHECK(threw);
    }
  }

  TEST_CASE("kinds must fit the environment") {
    std::vector<std::string> problems;
    validate(agent_spec_from_json(json::parse(R"({"kind": "optimal_nvp"})")), EnvId::bg, problems);
    validate(agent_spec_from_json(json::parse(R"({"kind": "mean_anchored", "alpha0": 0.5})")), EnvId::mpr, problems);
    validate(agent_spec_from_json(json::parse(R"({"kind": "expost_replay"})")), EnvId::nvp, problems);
    CHECK(problems.size() == 3);
    problems.clear();
    validate(agent_spec_from_json(json::parse(R"({"kind": "expost_replay"})")), EnvId::mpr, problems);
    validate(agent_spec_from_json(json::parse(R"({"kind": "order_up_to"})")), EnvId::scn, problems);
    CHECK(problems.empty());
  }

  TEST_CASE("make_agent builds a working agent") {
    AgentBinding binding{testing::config_for(EnvId::nvp, 20, 1)};
    auto agent = make_agent(agent_spec_from_json(json::parse(R"({"kind": "optimal_nvp"})")), binding);
    CHECK(agent->decide(nvp_observation(1), MemoryWindow(0)).total() == 225);
    CHECK_THROWS_AS(make_agent(agent_spec_from_json(json::parse(R"({"kind": "base_stock", "S": -4})")), binding),
                    ConfigError);
  }
}

TEST_SUITE("protocol") {
  TEST_CASE("every message type round trips") {
    HelloMsg hello;
    hello.env = EnvId::twn;
    hello.role = "hub";
    hello.channels = {"regular", "express"};
    hello.horizon = 12;
    hello.framing = "PF";
    hello.cognitive_reflection = true;
    hello.info_sharing = true;
    hello.memory_window = 5;

    ObserveMsg observe;
    observe.observation = bg_observation();
    observe.observation.partners = std::vector<PartnerState>{{"retailer", 3, 1, 7}};
    observe.observation.lead_time_process = make_lead_time(UniformInt{1, 4});
    observe.observation.demand_history = {4, 8};
    observe.memory = {{bg_observation(), single_order("upstream", 3)}};
    observe.context = "line one\nline two";

    EndMsg end{36, {{"wholesaler", Fixed::from_double(12.25)}}};

    const std::vector<Message> messages = {hello, ReadyMsg{}, ReadyMsg{1}, observe,
                                           ActMsg{3, single_order("upstream", 9)}, end};
    for (const auto& m : messages) {
      const auto line = encode(m);
      CAPTURE(line);
      CHECK(line.find('\n') == std::string::npos);
      CHECK(decode(line) == m);
      CHECK(json::parse(line).at("type") == std::string(message_type(m)));
    }
    CHECK(json::parse(encode(hello)).at("period") == 0);
    CHECK(json::parse(encode(end)).at("period") == 36);
  }

  TEST_CASE("decode errors carry distinct codes") {
    CHECK(decode_code("not json") == ProtocolErrc::malformed_json);
    CHECK(decode_code(R"({"type": "act", "period": 1)") == ProtocolErrc::malformed_json);
    CHECK(decode_code(R"([1, 2])") == ProtocolErrc::schema_violation);
    CHECK(decode_code(R"({"type": "act", "period": 1, "payload": {}})") == ProtocolErrc::schema_violation);
    CHECK(decode_code(R"({"type": "act", "period": 1, "payload": {"orders": {"a": 1.5}}})") ==
          ProtocolErrc::schema_violation);
    CHECK(decode_code(R"({"type": "act", "period": 1, "payload": {"orders": {}}, "extra": 1})") ==
          ProtocolErrc::schema_violation);
    CHECK(decode_code(R"({"type": "teleport", "period": 1, "payload": {}})") == ProtocolErrc::schema_violation);
    CHECK(decode_code(R"({"type": "ready", "payload": {}})") == ProtocolErrc::schema_violation);
  }

  TEST_CASE("context text hides partners unless shared") {
    auto o = bg_observation();
    const auto plain = render_context(o, MemoryWindow(3));
    CHECK(plain.find("retailer") == std::string::npos);
    CHECK(plain.find("wholesaler") != std::string::npos);
    o.partners = std::vector<PartnerState>{{"retailer", 3, 1, 7}};
    const auto shared = render_context(o, MemoryWindow(3));
    CHECK(shared.find("retailer") != std::string::npos);
    CHECK(render_context(o, MemoryWindow(3)) == shared);
  }
}

TEST_SUITE("external agents") {
  TEST_CASE("echo agent completes every environment") {
    for (EnvId env : {EnvId::nvp, EnvId::mpr, EnvId::bg, EnvId::twn, EnvId::scn}) {
      CAPTURE(to_string(env));
      auto config = testing::config_for(env, 6, 3);
      config.memory_window = 2;
      const auto log = testing::run_with(config, [](std::size_t) { return echo("ok"); });
      CHECK(log.steps.size() == 6);
      for (const auto& step : log.steps)
        for (const auto& [role, action] : step.actions) CHECK(action.total() == 0);
    }
  }

  TEST_CASE("external zero orders match the scripted constant agent") {
    const auto config = testing::config_for(EnvId::bg, 8, 5);
    const auto ext = testing::run_with(config, [](std::size_t) { return echo("ok"); });
    const auto scripted = testing::run_with(config, [](std::size_t) { return std::make_unique<ConstantAgent>(0); });
    CHECK(ext == scripted);
  }

  TEST_CASE("each fault maps to its own code") {
    using std::chrono::milliseconds;
    CHECK(abort_code(EnvId::nvp, "malformed") == ProtocolErrc::malformed_json);
    CHECK(abort_code(EnvId::nvp, "missing-orders") == ProtocolErrc::schema_violation);
    CHECK(abort_code(EnvId::nvp, "fractional") == ProtocolErrc::schema_violation);
    CHECK(abort_code(EnvId::nvp, "wrong-period") == ProtocolErrc::schema_violation);
    CHECK(abort_code(EnvId::nvp, "hang", milliseconds(200)) == ProtocolErrc::timeout);
    CHECK(abort_code(EnvId::nvp, "close") == ProtocolErrc::stream_closed);
    CHECK(abort_code(EnvId::bg, "bad-version") == ProtocolErrc::version_mismatch);
    CHECK(abort_code(EnvId::bg, "negative") == ProtocolErrc::invalid_action);
    CHECK(abort_code(EnvId::twn, "unknown-channel") == ProtocolErrc::invalid_action);
  }

  TEST_CASE("aborts report the period and role") {
    const auto config = testing::config_for(EnvId::nvp, 4, 1);
    try {
      testing::run_with(config, [](std::size_t) { return echo("negative"); });
      FAIL("no abort");
    } catch (const EpisodeAborted& e) {
      CHECK(e.period() == 1);
      CHECK(e.role() == "newsvendor");
    }
  }

  TEST_CASE("missing executable is a transport failure") {
    CHECK_THROWS_AS(SubprocessTransport({"/nonexistent/agent"}).request("{}", std::chrono::seconds(1)), ProtocolError);
  }

  TEST_CASE("http transport") {
    httplib::Server server;
    std::atomic<int> posts{0};
    server.Post("/agent", [&](const httplib::Request& req, httplib::Response& res) {
      ++posts;
      const auto msg = decode(req.body);
      if (const auto* hello = std::get_if<HelloMsg>(&msg)) {
        CHECK(hello->role == "newsvendor");
        res.set_content(encode(ReadyMsg{}), "application/x-ndjson");
      } else if (const auto* obs = std::get_if<ObserveMsg>(&msg)) {
        res.set_content(encode(ActMsg{obs->observation.period, single_order("order", 100)}), "application/x-ndjson");
      }
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread runner([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    struct Stop {
      httplib::Server& s;
      std::thread& t;
      ~Stop() {
        s.stop();
        t.join();
      }
    } stop{server, runner};

    const auto config = testing::config_for(EnvId::nvp, 5, 2);
    const std::string url = "http://127.0.0.1:" + std::to_string(port) + "/agent";
    const auto log = testing::run_with(config, [&](std::size_t) {
      return std::make_unique<ExternalAgent>(std::make_unique<HttpTransport>(url), SessionOptions{});
    });
    CHECK(log.steps.size() == 5);
    for (const auto& step : log.steps) CHECK(step.actions.at("newsvendor").total() == 100);
    CHECK(posts == 1 + 5 + 1);

    CHECK_THROWS_AS(HttpTransport("ftp://example"), ProtocolError);
    HttpTransport dead("http://127.0.0.1:1/agent");
    try {
      dead.request("{}", std::chrono::milliseconds(500));
      FAIL("no error");
    } catch (const ProtocolError& e) {
      CHECK(e.code() != ProtocolErrc::malformed_json);
    }
  }
}
