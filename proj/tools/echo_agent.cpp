// Scripted external agent for protocol tests. Orders 0 on every channel;
// the mode argument injects one specific fault.
#include <chrono>
#include <iostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

void send(const json& j) { std::cout << j.dump() << "\n" << std::flush; }

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "ok";
  static const char* kModes[] = {"ok", "malformed", "missing-orders", "hang", "close",
                                 "bad-version", "negative", "fractional", "unknown-channel", "wrong-period"};
  bool known = false;
  for (const char* m : kModes) known = known || mode == m;
  if (!known) {
    std::cerr << "echo_agent: unknown mode '" << mode << "'\n";
    return 2;
  }

  std::string line;
  while (std::getline(std::cin, line)) {
    const json msg = json::parse(line);
    const auto type = msg.at("type").get<std::string>();
    const int period = msg.at("period").get<int>();
    if (type == "hello") {
      json payload = json::object();
      if (mode == "bad-version") payload["protocol_version"] = 2;
      send({{"type", "ready"}, {"period", 0}, {"payload", payload}});
    } else if (type == "observe") {
      if (mode == "hang") std::this_thread::sleep_for(std::chrono::hours(1));
      if (mode == "close") return 0;
      if (mode == "malformed") {
        std::cout << "{\"type\": \"act\", \"period\": " << period << ", \"payload\": {\"orders\"\n" << std::flush;
        continue;
      }
      json orders = json::object();
      for (const auto& ch : msg.at("payload").at("observation").at("channels")) {
        const auto name = ch.get<std::string>();
        if (mode == "negative") orders[name] = -1;
        else if (mode == "fractional") orders[name] = 1.5;
        else orders[name] = 0;
      }
      if (mode == "unknown-channel") orders["bogus"] = 0;
      json payload = {{"orders", orders}};
      if (mode == "missing-orders") payload = json::object();
      send({{"type", "act"}, {"period", mode == "wrong-period" ? period + 1 : period}, {"payload", payload}});
    } else if (type == "end") {
      return 0;
    }
  }
  return 0;
}
