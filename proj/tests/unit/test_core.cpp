#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "invbench/core/errors.hpp"
#include "invbench/core/fixed.hpp"
#include "invbench/core/memory.hpp"
#include "invbench/core/rng.hpp"
#include "invbench/core/stochastic.hpp"

using namespace invbench;

TEST_SUITE("fixed") {
  TEST_CASE("exact decimal arithmetic") {
    const auto a = Fixed::from_double(0.1);
    Fixed sum;
    for (int i = 0; i < 10; ++i) sum += a;
    CHECK(sum == Fixed::from_int(1));
    CHECK(Fixed::from_double(2.5).raw() == 25'000);
    CHECK((Fixed::from_int(3) * 4) == Fixed::from_int(12));
    CHECK((Fixed::from_double(0.5) - Fixed::from_int(1)).to_string() == "-0.5");
  }

  TEST_CASE("shortest text form") {
    CHECK(Fixed::from_int(12).to_string() == "12");
    CHECK(Fixed::from_double(0.0625).to_string() == "0.0625");
    CHECK(Fixed::from_double(-3.25).to_string() == "-3.25");
    CHECK(Fixed{}.to_string() == "0");
  }

  TEST_CASE("more than four decimals is rejected") {
    CHECK_THROWS_AS(Fixed::from_double(0.12345), std::invalid_argument);
    CHECK_THROWS_AS(Fixed::from_double(std::nan("")), std::invalid_argument);
  }
}

TEST_SUITE("rng") {
  TEST_CASE("counter-based output is a pure function of key and index") {
    StreamRng a(42, "demand");
    StreamRng b(42, "demand");
    for (int i = 0; i < 100; ++i) CHECK(a() == b());
    CHECK(a.draws() == 100);
  }

  TEST_CASE("stream keys differ by id and seed") {
    std::set<std::uint64_t> keys;
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL})
      for (const char* id : {"demand", "lead_time", "agent/retailer"}) keys.insert(derive_stream_key(seed, id));
    CHECK(keys.size() == 9);
  }

  TEST_CASE("below stays in range and covers it") {
    StreamRng r(7, "x");
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
      const auto v = r.below(5);
      REQUIRE(v < 5);
      ++hits[v];
    }
    for (int h : hits) CHECK(h > 800);
  }

  TEST_CASE("unit draws lie in [0, 1)") {
    StreamRng r(9, "u");
    for (int i = 0; i < 10000; ++i) {
      const double u = r.unit();
      REQUIRE(u >= 0.0);
      REQUIRE(u < 1.0);
    }
  }
}

TEST_SUITE("stochastic") {
  TEST_CASE("constant and trace pass through") {
    CHECK(sample(make_demand(Constant{7}), 1, 3) == std::vector<std::int64_t>{7, 7, 7});
    CHECK(sample(make_demand(Trace{{4, 8, 4}}), 1, 3) == std::vector<std::int64_t>{4, 8, 4});
    // Past the end the last value is held.
    CHECK(sample(make_demand(Trace{{4, 8}}), 1, 4) == std::vector<std::int64_t>{4, 8, 8, 8});
    CHECK(sample(make_demand(Constant{7}), 1, 0).empty());
  }

  TEST_CASE("uniform mean within three standard errors") {
    const auto xs = sample(make_demand(UniformInt{0, 300}), 2024, 10000);
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    // Discrete uniform on 0..300: variance ((301^2) - 1) / 12.
    const double se = std::sqrt((301.0 * 301.0 - 1.0) / 12.0 / xs.size());
    CHECK(std::fabs(mean - 150.0) < 3 * se);
    for (auto x : xs) REQUIRE((x >= 0 && x <= 300));
  }

  TEST_CASE("poisson and truncated normal moments") {
    const auto p = sample(make_demand(Poisson{10.0}), 5, 20000);
    const double pm = std::accumulate(p.begin(), p.end(), 0.0) / p.size();
    CHECK(std::fabs(pm - 10.0) < 3 * std::sqrt(10.0 / p.size()));

    const auto n = sample(make_demand(NormalTruncated{100.0, 10.0}), 5, 20000);
    const double nm = std::accumulate(n.begin(), n.end(), 0.0) / n.size();
    CHECK(std::fabs(nm - 100.0) < 3 * 10.0 / std::sqrt(static_cast<double>(n.size())) + 0.01);
    for (auto x : n) REQUIRE(x >= 0);
  }

  TEST_CASE("lead times are strictly positive") {
    for (auto law : {ProcessLaw{NormalTruncated{1.0, 3.0}}, ProcessLaw{Poisson{0.5}}, ProcessLaw{UniformInt{1, 4}}}) {
      for (auto x : sample(make_lead_time(law), 3, 2000)) REQUIRE(x >= 1);
    }
  }

  TEST_CASE("same seed and stream replays, distinct streams differ") {
    const auto a = sample(make_demand(Poisson{10.0}), 11, 200);
    CHECK(a == sample(make_demand(Poisson{10.0}), 11, 200));
    CHECK(a != sample(make_demand(Poisson{10.0}, "demand/other"), 11, 200));
    CHECK(a != sample(make_demand(Poisson{10.0}), 12, 200));
  }

  TEST_CASE("stream isolation: drawing lead times never shifts demand") {
    Sampler d1(make_demand(Poisson{10.0}), 77);
    Sampler d2(make_demand(Poisson{10.0}), 77);
    Sampler lead(make_lead_time(UniformInt{1, 4}), 77);
    for (int i = 0; i < 500; ++i) {
      for (int k = 0; k < i % 7; ++k) lead.next();
      REQUIRE(d1.next() == d2.next());
    }
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(validate(make_demand(NormalTruncated{10.0, -1.0})), ConfigError);
    CHECK_THROWS_AS(validate(make_demand(UniformInt{5, 1})), ConfigError);
    CHECK_THROWS_AS(validate(make_lead_time(Constant{0})), ConfigError);
    CHECK_THROWS_AS(validate(make_demand(Trace{{}})), ConfigError);
    CHECK_THROWS_AS(validate(make_demand(Trace{{3, -1}})), ConfigError);
    CHECK_THROWS_AS(sample(make_demand(Poisson{-2.0}), 1, 3), ConfigError);
  }

  TEST_CASE("analytic means") {
    CHECK(*mean(make_demand(UniformInt{0, 300})) == 150.0);
    CHECK(*mean(make_demand(Poisson{10.0})) == 10.0);
    CHECK(*mean(make_demand(Constant{7})) == 7.0);
    CHECK_FALSE(mean(make_demand(Trace{{1, 2}})).has_value());
  }
}

TEST_SUITE("memory") {
  Observation obs_at(int t) {
    Observation o;
    o.period = t;
    return o;
  }

  TEST_CASE("evicts the oldest pair") {
    MemoryWindow w(2);
    w = push_memory(w, obs_at(1), single_order("order", 1));
    w = push_memory(w, obs_at(2), single_order("order", 2));
    w = push_memory(w, obs_at(3), single_order("order", 3));
    REQUIRE(w.size() == 2);
    CHECK(w.entries()[0].first.period == 2);
    CHECK(w.entries()[1].second.orders.at("order") == 3);
  }

  TEST_CASE("k = 0 stays empty") {
    MemoryWindow w(0);
    for (int t = 1; t <= 5; ++t) w = push_memory(w, obs_at(t), {});
    CHECK(w.empty());
  }

  TEST_CASE("k = 5 after one push has length 1") {
    CHECK(push_memory(MemoryWindow(5), obs_at(1), {}).size() == 1);
  }

  TEST_CASE("push_memory leaves its input untouched") {
    MemoryWindow w(3);
    const auto w2 = push_memory(w, obs_at(1), {});
    CHECK(w.empty());
    CHECK(w2.size() == 1);
  }
}

namespace {

// Records every memory window it is handed.
class RecordingAgent final : public Agent {
 public:
  std::vector<MemoryWindow> seen;
  Action decide(const Observation& obs, const MemoryWindow& memory) override {
    seen.push_back(memory);
    return single_order(obs.channels.front(), obs.period);
  }
};

class ThrowingAgent final : public Agent {
 public:
  Action decide(const Observation& obs, const MemoryWindow&) override {
    if (obs.period == 3) throw ProtocolError(ProtocolErrc::timeout, "late");
    return single_order("order", 0);
  }
};

}  // namespace

TEST_SUITE("episode") {
  TEST_CASE("NVP with the optimal agent logs 20 steps") {
    auto config = testing::config_for(EnvId::nvp, 20, 1);
    const auto log = testing::run_with(config, [](std::size_t) { return std::make_unique<OptimalNewsvendorAgent>(); });
    CHECK(log.steps.size() == 20);
    for (const auto& s : log.steps) CHECK(s.actions.at("newsvendor").orders.at("order") == 225);
    CHECK(verify_costs(log).empty());
  }

  TEST_CASE("one period with a constant order matches hand computation") {
    auto config = testing::config_for(EnvId::nvp, 1, 3);
    const auto log = testing::run_with(config, [](std::size_t) { return std::make_unique<ConstantAgent>(100); });
    REQUIRE(log.steps.size() == 1);
    const auto d = log.steps[0].demand.at("newsvendor");
    const auto sold = std::min<std::int64_t>(100, d);
    const auto& node = log.steps[0].nodes[0];
    CHECK(*node.profit == Fixed::from_int(12 * sold - 3 * 100));
    // Shortfall against perfect information: (r - c) lost + c leftover.
    CHECK(node.cost == Fixed::from_int(9 * std::max<std::int64_t>(d - 100, 0) + 3 * std::max<std::int64_t>(100 - d, 0)));
    CHECK(log.total_cost() == node.cost);
  }

  TEST_CASE("replay determinism in every environment") {
    for (auto env : {EnvId::nvp, EnvId::mpr, EnvId::bg, EnvId::twn, EnvId::scn}) {
      auto config = testing::config_for(env, 25, 99);
      auto make = [](std::size_t) { return std::make_unique<RandomAgent>(0, 15); };
      CHECK(testing::run_with(config, make) == testing::run_with(config, make));
      config.seed = 100;
      auto other = testing::run_with(config, make);
      config.seed = 99;
      CHECK_FALSE(testing::run_with(config, make) == other);
    }
  }

  TEST_CASE("memory windows hold exactly the last k own steps") {
    auto config = testing::config_for(EnvId::nvp, 8, 5);
    config.memory_window = 3;
    RecordingAgent agent;
    Agent* agents[] = {&agent};
    run_episode(config, agents);
    REQUIRE(agent.seen.size() == 8);
    for (std::size_t t = 0; t < 8; ++t) {
      const auto& w = agent.seen[t];
      CHECK(w.size() == std::min<std::size_t>(t, 3));
      for (std::size_t i = 0; i < w.size(); ++i) {
        const int expected = static_cast<int>(t - w.size() + i + 1);
        CHECK(w.entries()[i].first.period == expected);
        CHECK(w.entries()[i].second.orders.at("order") == expected);
      }
    }
  }

  TEST_CASE("agent count must match the roles") {
    auto config = testing::config_for(EnvId::bg, 5, 1);
    ConstantAgent a(4);
    Agent* agents[] = {&a};
    CHECK_THROWS_AS(run_episode(config, agents), ConfigError);
  }

  TEST_CASE("invalid parameters are rejected before period 1") {
    auto config = testing::config_for(EnvId::nvp, 5, 1);
    std::get<NvpParams>(config.params).cost = Fixed::from_int(20);
    RecordingAgent agent;
    Agent* agents[] = {&agent};
    CHECK_THROWS_AS(run_episode(config, agents), ConfigError);
    CHECK(agent.seen.empty());

    config = testing::config_for(EnvId::nvp, 0, 1);
    CHECK_THROWS_AS(run_episode(config, agents), ConfigError);
  }

  TEST_CASE("protocol failures abort with the period and role") {
    auto config = testing::config_for(EnvId::nvp, 5, 1);
    ThrowingAgent agent;
    Agent* agents[] = {&agent};
    try {
      run_episode(config, agents);
      FAIL("expected an abort");
    } catch (const EpisodeAborted& e) {
      CHECK(e.period() == 3);
      CHECK(e.role() == "newsvendor");
      CHECK(e.code() == ProtocolErrc::timeout);
    }
  }

  TEST_CASE("illegal actions abort with invalid_action") {
    class Bad final : public Agent {
     public:
      Action a;
      explicit Bad(Action act) : a(std::move(act)) {}
      Action decide(const Observation&, const MemoryWindow&) override { return a; }
    };
    auto config = testing::config_for(EnvId::nvp, 3, 1);
    for (const auto& act : {Action{{{"order", -1}}}, Action{}, Action{{{"order", 1}, {"other", 0}}}}) {
      Bad agent(act);
      Agent* agents[] = {&agent};
      try {
        run_episode(config, agents);
        FAIL("expected an abort");
      } catch (const EpisodeAborted& e) {
        CHECK(e.code() == ProtocolErrc::invalid_action);
        CHECK(e.period() == 1);
      }
    }
  }

  TEST_CASE("logged costs are self-consistent in every environment") {
    for (auto env : {EnvId::nvp, EnvId::mpr, EnvId::bg, EnvId::twn, EnvId::scn}) {
      auto config = testing::config_for(env, 40, 17);
      const auto log = testing::run_with(config, [](std::size_t) { return std::make_unique<RandomAgent>(0, 20); });
      CHECK(log.steps.size() == 40);
      CHECK(verify_costs(log).empty());
      Fixed sum;
      for (const auto& [_, v] : log.totals) sum += v;
      CHECK(sum == log.total_cost());
    }
  }
}
