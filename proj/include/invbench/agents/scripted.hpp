#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invbench/core/episode.hpp"
#include "invbench/core/rng.hpp"

namespace invbench {

// Channel a single-channel policy orders on: "regular" or "hub" when the
// role has one, else the first channel. Other channels get 0.
const std::string& primary_channel(const std::vector<std::string>& channels);

// Every channel present, `quantity` on the primary one.
Action order_on_primary(const Observation& obs, std::int64_t quantity);

// Orders the newsvendor critical-fractile quantity every round.
class OptimalNewsvendorAgent final : public Agent {
 public:
  Action decide(const Observation& obs, const MemoryWindow& memory) override;
};

// Replays a fixed order list, one entry per decision. With no list, the
// ex-post optimal orders of the realized MPR episode are computed at
// episode start from the environment parameters and seed.
class ExPostReplayAgent final : public Agent {
 public:
  explicit ExPostReplayAgent(std::vector<std::int64_t> orders, std::optional<MprParams> params = std::nullopt);
  void begin_episode(const EpisodeContext& ctx) override;
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

 private:
  std::vector<std::int64_t> fixed_;
  std::optional<MprParams> params_;
  std::vector<std::int64_t> orders_;
  std::size_t next_ = 0;
};

// Orders max(0, S - inventory position).
class BaseStockAgent final : public Agent {
 public:
  explicit BaseStockAgent(std::int64_t level) : level_(level) {}
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

 private:
  std::int64_t level_;
};

// Naive forecast chaser: the last observed demand (or downstream order) is
// the forecast for every future period, and the target position is
// (L + 1) * forecast + safety.
class OrderUpToAgent final : public Agent {
 public:
  explicit OrderUpToAgent(std::int64_t safety = 0) : safety_(safety) {}
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

 private:
  std::int64_t safety_;
};

// Pull-to-center newsvendor: targets mu + (1 - alpha0)(q* - mu). Fractional
// targets are met exactly on average by diffusing the rounding error, so
// after period t the cumulative order is round(t * target).
class MeanAnchoredAgent final : public Agent {
 public:
  explicit MeanAnchoredAgent(double alpha0) : alpha0_(alpha0) {}
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

  // Target in units of 1e-4.
  static std::int64_t target_raw(const Observation& obs, double alpha0);

 private:
  double alpha0_;
};

// Orders last period's demand; the demand mean (or 0) in period 1.
class DemandChaserAgent final : public Agent {
 public:
  Action decide(const Observation& obs, const MemoryWindow& memory) override;
};

class ConstantAgent final : public Agent {
 public:
  explicit ConstantAgent(std::int64_t quantity) : quantity_(quantity) {}
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

 private:
  std::int64_t quantity_;
};

// Uniform orders in [low, high] from the stream "agent/<role>".
class RandomAgent final : public Agent {
 public:
  RandomAgent(std::int64_t low, std::int64_t high) : low_(low), high_(high) {}
  void begin_episode(const EpisodeContext& ctx) override;
  Action decide(const Observation& obs, const MemoryWindow& memory) override;

 private:
  std::int64_t low_;
  std::int64_t high_;
  std::optional<StreamRng> rng_;
};

}  // namespace invbench
