#include "cakecut/scenario.hpp"

#include <algorithm>
#include <fstream>

namespace cakecut {

const std::vector<std::string>& known_protocols() {
  static const std::vector<std::string> names{"endriss", "sgall-woeginger", "plaintext",
                                              "plaintext-quantized", "crypto"};
  return names;
}

EngineConfig Scenario::engine_config(Backend backend) const {
  EngineConfig c;
  c.backend = backend;
  c.levels = levels;
  c.group = GroupParams::named(group);
  c.seed = seed;
  c.delivery = delivery;
  c.tamper = tamper;
  c.parallel_agents = parallel_agents;
  return c;
}

namespace {

const Json& require(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw ScenarioError(path.empty() ? key : path + "." + key, "missing");
  return j.at(key);
}

std::string str(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ScenarioError(path, "expected a string");
  return j.get<std::string>();
}

std::uint64_t count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw ScenarioError(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Rational rational(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ScenarioError(path, "rationals are written as strings, e.g. \"5/6\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(path, e.what());
  }
}

Density density(const Json& j, const std::string& path) {
  const std::string sp = path + ".segments";
  const Json& segs = require(j, path, "segments");
  if (!segs.is_array()) throw ScenarioError(sp, "expected an array of [right, value] pairs");
  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string ip = sp + "[" + std::to_string(i) + "]";
    if (!segs[i].is_array() || segs[i].size() != 2) throw ScenarioError(ip, "expected [right, value]");
    out.push_back({rational(segs[i][0], ip + "[0]"), rational(segs[i][1], ip + "[1]")});
  }
  if (auto err = validate_density(out)) {
    throw ScenarioError(sp, std::string(to_string(err->kind)) + ": " + err->message);
  }
  return Density(std::move(out));
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ScenarioError("", "scenario must be a JSON object");

  const Json& players = require(j, "", "players");
  if (!players.is_array()) throw ScenarioError("players", "expected an array");
  if (players.size() < 2) throw ScenarioError("players", "the protocols need at least two players");
  std::vector<Density> ds;
  for (std::size_t i = 0; i < players.size(); ++i) {
    ds.push_back(density(players[i], "players[" + std::to_string(i) + "]"));
  }

  Scenario s(Profile(std::move(ds)));
  s.name = j.contains("name") ? str(j.at("name"), "name") : "scenario";
  s.seed = str(require(j, "", "seed"), "seed");

  const Json& protos = require(j, "", "protocols");
  if (!protos.is_array() || protos.empty()) throw ScenarioError("protocols", "expected a non-empty array");
  for (std::size_t i = 0; i < protos.size(); ++i) {
    const std::string path = "protocols[" + std::to_string(i) + "]";
    std::string name = str(protos[i], path);
    const auto& known = known_protocols();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ScenarioError(path, "unknown protocol \"" + name + "\"");
    }
    s.protocols.push_back(name);
  }

  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.contains("levels") == g.contains("exponent")) {
      throw ScenarioError("grid", "give exactly one of \"levels\" or \"exponent\"");
    }
    if (g.contains("exponent")) {
      auto m = count(g.at("exponent"), "grid.exponent");
      if (m > 20) throw ScenarioError("grid.exponent", "at most 20");
      s.levels = std::size_t{1} << m;
    } else {
      s.levels = count(g.at("levels"), "grid.levels");
      if (s.levels < 1 || s.levels > (std::size_t{1} << 20)) {
        throw ScenarioError("grid.levels", "must be in [1, 2^20]");
      }
    }
  }

  if (j.contains("group")) {
    s.group = str(j.at("group"), "group");
    try {
      GroupParams::named(s.group);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("group", e.what());
    }
  }

  if (j.contains("delivery")) {
    const Json& d = j.at("delivery");
    std::string mode = str(require(d, "delivery", "mode"), "delivery.mode");
    if (mode == "fifo") {
      s.delivery.mode = DeliverySchedule::Mode::Fifo;
    } else if (mode == "reverse") {
      s.delivery.mode = DeliverySchedule::Mode::Reverse;
    } else if (mode == "random") {
      s.delivery.mode = DeliverySchedule::Mode::Random;
      s.delivery.seed = count(require(d, "delivery", "seed"), "delivery.seed");
    } else {
      throw ScenarioError("delivery.mode", "expected fifo, reverse or random");
    }
  }

  if (j.contains("attack")) {
    const Json& a = j.at("attack");
    auto who = count(require(a, "attack", "attacker"), "attack.attacker");
    if (who < 1 || who > s.profile.size()) throw ScenarioError("attack.attacker", "no such player");
    std::string strategy = a.contains("strategy") ? str(a.at("strategy"), "attack.strategy") : "endriss-leak";
    if (strategy != "endriss-leak") throw ScenarioError("attack.strategy", "unknown strategy");
    s.attack = AttackSpec{static_cast<PlayerIndex>(who - 1), strategy};
  }

  if (j.contains("tamper")) {
    const Json& t = j.at("tamper");
    auto seq = count(require(t, "tamper", "seq"), "tamper.seq");
    std::string field = str(require(t, "tamper", "field"), "tamper.field");
    if (field != "proof" && field != "payload") throw ScenarioError("tamper.field", "expected proof or payload");
    s.tamper = TamperSpec{static_cast<std::size_t>(seq), field};
  }

  if (j.contains("parallel_agents")) {
    if (!j.at("parallel_agents").is_boolean()) throw ScenarioError("parallel_agents", "expected a boolean");
    s.parallel_agents = j.at("parallel_agents").get<bool>();
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ScenarioError("", path + ": " + e.what());
  }
  return parse_scenario(j);
}

}  // namespace cakecut
