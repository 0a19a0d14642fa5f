#include "invbench/env/params.hpp"

#include <set>

#include "invbench/core/errors.hpp"

namespace invbench {

using nlohmann::json;

namespace {

void check_nonneg(const char* name, Fixed v, std::vector<std::string>& problems) {
  if (v < Fixed{}) problems.push_back(std::string(name) + " must be >= 0");
}

void check_process(const StochasticProcess& p, std::vector<std::string>& problems) {
  try {
    validate(p);
  } catch (const ConfigError& e) {
    problems.push_back(e.what());
  }
}

// Reads fields of one JSON object and rejects keys nobody asked for, so a
// typo in a config never silently falls back to a default.
class FieldReader {
 public:
  FieldReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  template <class T>
  void read(const char* key, T& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(where_ + "." + key + ": " + e.what());
    }
  }

  void read_fixed(const char* key, Fixed& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    const auto& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(where_ + "." + key + ": expected a number");
    try {
      out = Fixed::from_double(v.get<double>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where_ + "." + key + ": " + e.what());
    }
  }

  void read_fixed_list(const char* key, std::vector<Fixed>& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    const auto& v = j_.at(key);
    if (v.is_number()) {
      out.assign(out.size(), Fixed::from_double(v.get<double>()));
      return;
    }
    if (!v.is_array()) throw ConfigError(where_ + "." + key + ": expected a number or an array");
    out.clear();
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(where_ + "." + key + ": expected numbers");
      out.push_back(Fixed::from_double(x.get<double>()));
    }
  }

  void read_process(const char* key, StochasticProcess& out) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    out = process_from_json(j_.at(key), out.stream_id, out.minimum);
  }

  void finish() const {
    for (const auto& [k, _] : j_.items())
      if (!seen_.count(k)) throw ConfigError(where_ + ": unknown field '" + k + "'");
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

json fixed_list(const std::vector<Fixed>& v) {
  json out = json::array();
  for (auto f : v) out.push_back(f.to_double());
  return out;
}

}  // namespace

EnvParams default_params(EnvId id) {
  switch (id) {
    case EnvId::nvp: return NvpParams{};
    case EnvId::mpr: return MprParams{};
    case EnvId::bg: return BeerGameParams{};
    case EnvId::twn: return WarehouseParams{};
    case EnvId::scn: return SupplyNetworkParams{};
  }
  throw ConfigError("unknown environment id");
}

void validate(const EnvParams& params, std::vector<std::string>& problems) {
  if (const auto* p = std::get_if<NvpParams>(&params)) {
    check_process(p->demand, problems);
    if (!(p->cost > Fixed{})) problems.push_back("NVP: unit cost c must be > 0");
    if (!(p->price > p->cost)) problems.push_back("NVP: unit revenue r must exceed unit cost c");
  } else if (const auto* p = std::get_if<MprParams>(&params)) {
    check_process(p->demand, problems);
    check_process(p->lead_time, problems);
    if (p->lead_time.minimum < 1) problems.push_back("MPR: lead times must be >= 1");
    check_nonneg("MPR: holding cost", p->holding, problems);
    check_nonneg("MPR: backorder cost", p->backorder, problems);
    if (p->review_periods.empty()) {
      if (p->review_interval < 1) problems.push_back("MPR: review_interval must be >= 1");
      if (p->first_review < 1) problems.push_back("MPR: first_review must be >= 1");
    } else {
      int prev = 0;
      for (int t : p->review_periods) {
        if (t <= prev) {
          problems.push_back("MPR: review_periods must be strictly increasing and >= 1");
          break;
        }
        prev = t;
      }
    }
  } else if (const auto* p = std::get_if<BeerGameParams>(&params)) {
    check_process(p->demand, problems);
    if (p->lead_time < 1) problems.push_back("BG: lead_time must be >= 1");
    constexpr auto n = BeerGameParams::kEchelons;
    if (p->holding.size() != n || p->backorder.size() != n || p->initial_inventory.size() != n) {
      problems.push_back("BG: holding, backorder and initial_inventory need 4 entries each");
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        check_nonneg("BG: holding cost", p->holding[i], problems);
        check_nonneg("BG: backorder cost", p->backorder[i], problems);
        if (p->initial_inventory[i] < 0) problems.push_back("BG: initial_inventory must be >= 0");
      }
    }
    if (p->initial_pipeline < 0) problems.push_back("BG: initial_pipeline must be >= 0");
  } else if (const auto* p = std::get_if<WarehouseParams>(&params)) {
    check_process(p->demand, problems);
    if (p->mini_warehouses < 1) problems.push_back("TWN: need at least one mini-warehouse");
    if (p->lead_hub_to_mini < 1 || p->lead_direct < 1 || p->lead_manufacturer_to_hub < 1)
      problems.push_back("TWN: lead times must be >= 1");
    if (!(p->lead_hub_to_mini < p->lead_direct &&
          p->lead_direct < p->lead_manufacturer_to_hub + p->lead_hub_to_mini))
      problems.push_back("TWN: need lead_hub_to_mini < lead_direct < lead_manufacturer_to_hub + lead_hub_to_mini");
    check_nonneg("TWN: holding cost", p->holding, problems);
    check_nonneg("TWN: backorder cost", p->backorder, problems);
    if (p->hub_initial_inventory < 0 || p->mini_initial_inventory < 0)
      problems.push_back("TWN: initial inventories must be >= 0");
  } else if (const auto* p = std::get_if<SupplyNetworkParams>(&params)) {
    check_process(p->demand, problems);
    if (p->retailers < 1) problems.push_back("SCN: need at least one retailer");
    if (p->lead_expedited < 1) problems.push_back("SCN: lead times must be >= 1");
    if (!(p->lead_expedited < p->lead_regular)) problems.push_back("SCN: need lead_expedited < lead_regular");
    check_nonneg("SCN: regular unit cost", p->cost_regular, problems);
    if (!(p->cost_expedited > p->cost_regular)) problems.push_back("SCN: need cost_expedited > cost_regular");
    check_nonneg("SCN: holding cost", p->holding, problems);
    check_nonneg("SCN: backorder cost", p->backorder, problems);
    if (p->initial_inventory < 0) problems.push_back("SCN: initial_inventory must be >= 0");
  }
}

std::vector<int> review_schedule(const MprParams& params, int horizon) {
  std::vector<int> out;
  if (!params.review_periods.empty()) {
    for (int t : params.review_periods)
      if (t >= 1 && t <= horizon) out.push_back(t);
    return out;
  }
  for (int t = params.first_review; t <= horizon; t += params.review_interval) out.push_back(t);
  return out;
}

NodeCostRates cost_rates(const EnvParams& params, std::size_t role) {
  NodeCostRates rates;
  if (const auto* p = std::get_if<NvpParams>(&params)) {
    // Overage c_o = c per leftover unit, underage c_u = r - c per lost sale.
    rates.holding = p->cost;
    rates.backorder = p->price - p->cost;
  } else if (const auto* p = std::get_if<MprParams>(&params)) {
    rates.holding = p->holding;
    rates.backorder = p->backorder;
  } else if (const auto* p = std::get_if<BeerGameParams>(&params)) {
    rates.holding = p->holding.at(role);
    rates.backorder = p->backorder.at(role);
  } else if (const auto* p = std::get_if<WarehouseParams>(&params)) {
    rates.holding = p->holding;
    rates.backorder = p->backorder;
  } else if (const auto* p = std::get_if<SupplyNetworkParams>(&params)) {
    rates.holding = p->holding;
    rates.backorder = p->backorder;
    rates.purchase["regular"] = p->cost_regular;
    rates.purchase["expedited"] = p->cost_expedited;
  }
  return rates;
}

void to_json(json& j, const StochasticProcess& p) {
  j = json::object();
  j["kind"] = std::string(to_string(p.kind()));
  std::visit(
      [&](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, UniformInt>) {
          j["low"] = law.low;
          j["high"] = law.high;
        } else if constexpr (std::is_same_v<T, NormalTruncated>) {
          j["mean"] = law.mean;
          j["stddev"] = law.stddev;
        } else if constexpr (std::is_same_v<T, Poisson>) {
          j["rate"] = law.rate;
        } else if constexpr (std::is_same_v<T, Constant>) {
          j["value"] = law.value;
        } else {
          j["values"] = law.values;
        }
      },
      p.law);
}

StochasticProcess process_from_json(const json& j, std::string stream_id, std::int64_t minimum) {
  FieldReader r(j, "process");
  std::string kind;
  r.read("kind", kind);
  StochasticProcess p;
  p.stream_id = std::move(stream_id);
  p.minimum = minimum;
  if (kind == "uniform_int") {
    UniformInt u;
    r.read("low", u.low);
    r.read("high", u.high);
    p.law = u;
  } else if (kind == "normal_truncated") {
    NormalTruncated n;
    r.read("mean", n.mean);
    r.read("stddev", n.stddev);
    p.law = n;
  } else if (kind == "poisson") {
    Poisson po;
    r.read("rate", po.rate);
    p.law = po;
  } else if (kind == "constant") {
    Constant c;
    r.read("value", c.value);
    p.law = c;
  } else if (kind == "trace") {
    Trace t;
    r.read("values", t.values);
    p.law = t;
  } else {
    throw ConfigError("process: unknown kind '" + kind + "'");
  }
  r.finish();
  return p;
}

json params_to_json(const EnvParams& params) {
  json j;
  if (const auto* p = std::get_if<NvpParams>(&params)) {
    j["demand"] = p->demand;
    j["price"] = p->price.to_double();
    j["cost"] = p->cost.to_double();
  } else if (const auto* p = std::get_if<MprParams>(&params)) {
    j["demand"] = p->demand;
    j["lead_time"] = p->lead_time;
    j["holding"] = p->holding.to_double();
    j["backorder"] = p->backorder.to_double();
    j["review_periods"] = p->review_periods;
    j["review_interval"] = p->review_interval;
    j["first_review"] = p->first_review;
    j["initial_inventory"] = p->initial_inventory;
  } else if (const auto* p = std::get_if<BeerGameParams>(&params)) {
    j["demand"] = p->demand;
    j["lead_time"] = p->lead_time;
    j["holding"] = fixed_list(p->holding);
    j["backorder"] = fixed_list(p->backorder);
    j["initial_inventory"] = p->initial_inventory;
    j["initial_pipeline"] = p->initial_pipeline;
  } else if (const auto* p = std::get_if<WarehouseParams>(&params)) {
    j["mini_warehouses"] = p->mini_warehouses;
    j["lead_manufacturer_to_hub"] = p->lead_manufacturer_to_hub;
    j["lead_hub_to_mini"] = p->lead_hub_to_mini;
    j["lead_direct"] = p->lead_direct;
    j["demand"] = p->demand;
    j["holding"] = p->holding.to_double();
    j["backorder"] = p->backorder.to_double();
    j["hub_initial_inventory"] = p->hub_initial_inventory;
    j["mini_initial_inventory"] = p->mini_initial_inventory;
  } else if (const auto* p = std::get_if<SupplyNetworkParams>(&params)) {
    j["retailers"] = p->retailers;
    j["lead_regular"] = p->lead_regular;
    j["lead_expedited"] = p->lead_expedited;
    j["cost_regular"] = p->cost_regular.to_double();
    j["cost_expedited"] = p->cost_expedited.to_double();
    j["demand"] = p->demand;
    j["holding"] = p->holding.to_double();
    j["backorder"] = p->backorder.to_double();
    j["initial_inventory"] = p->initial_inventory;
  }
  return j;
}

EnvParams params_from_json(EnvId id, const json& j) {
  const std::string where = std::string(to_string(id)) + " params";
  EnvParams params = default_params(id);
  if (j.is_null()) return params;
  FieldReader r(j, where);
  if (auto* p = std::get_if<NvpParams>(&params)) {
    r.read_process("demand", p->demand);
    r.read_fixed("price", p->price);
    r.read_fixed("cost", p->cost);
  } else if (auto* p = std::get_if<MprParams>(&params)) {
    r.read_process("demand", p->demand);
    r.read_process("lead_time", p->lead_time);
    r.read_fixed("holding", p->holding);
    r.read_fixed("backorder", p->backorder);
    r.read("review_periods", p->review_periods);
    r.read("review_interval", p->review_interval);
    r.read("first_review", p->first_review);
    r.read("initial_inventory", p->initial_inventory);
  } else if (auto* p = std::get_if<BeerGameParams>(&params)) {
    r.read_process("demand", p->demand);
    r.read("lead_time", p->lead_time);
    r.read_fixed_list("holding", p->holding);
    r.read_fixed_list("backorder", p->backorder);
    r.read("initial_inventory", p->initial_inventory);
    r.read("initial_pipeline", p->initial_pipeline);
  } else if (auto* p = std::get_if<WarehouseParams>(&params)) {
    r.read("mini_warehouses", p->mini_warehouses);
    r.read("lead_manufacturer_to_hub", p->lead_manufacturer_to_hub);
    r.read("lead_hub_to_mini", p->lead_hub_to_mini);
    r.read("lead_direct", p->lead_direct);
    r.read_process("demand", p->demand);
    r.read_fixed("holding", p->holding);
    r.read_fixed("backorder", p->backorder);
    r.read("hub_initial_inventory", p->hub_initial_inventory);
    r.read("mini_initial_inventory", p->mini_initial_inventory);
  } else if (auto* p = std::get_if<SupplyNetworkParams>(&params)) {
    r.read("retailers", p->retailers);
    r.read("lead_regular", p->lead_regular);
    r.read("lead_expedited", p->lead_expedited);
    r.read_fixed("cost_regular", p->cost_regular);
    r.read_fixed("cost_expedited", p->cost_expedited);
    r.read_process("demand", p->demand);
    r.read_fixed("holding", p->holding);
    r.read_fixed("backorder", p->backorder);
    r.read("initial_inventory", p->initial_inventory);
  }
  r.finish();
  return params;
}

}  // namespace invbench
