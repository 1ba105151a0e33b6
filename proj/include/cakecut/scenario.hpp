#pragma once

// Scenario files (JSON). Rationals are strings such as "5/6" or "0.25".
//
// {
//   "name": "paper_sec3",
//   "players": [ {"segments": [["5/6", "4/5"], ["1", "2"]]}, ... ],
//   "protocols": ["endriss", "sgall-woeginger", "crypto"],
//   "grid": {"levels": 1024}            or {"exponent": 10},
//   "group": "test",                    or "modp2048"
//   "seed": "2026",
//   "delivery": {"mode": "random", "seed": 7},   optional, default fifo
//   "attack": {"attacker": 2, "strategy": "endriss-leak"},   optional
//   "tamper": {"seq": 12, "field": "proof"},   optional
//   "parallel_agents": false   optional
// }

#include "cakecut/engine.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cakecut {

class ScenarioError : public std::invalid_argument {
 public:
  ScenarioError(std::string path, const std::string& message)
      : std::invalid_argument(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Protocols a scenario can request.
///   endriss, sgall-woeginger   plaintext reference protocols
///   plaintext                  engine, exact bids with a trusted maximum
///   plaintext-quantized        engine, grid bids with a trusted maximum
///   crypto                     engine, secure auction over the bulletin board
const std::vector<std::string>& known_protocols();

struct AttackSpec {
  PlayerIndex attacker;
  std::string strategy;  // "endriss-leak"
};

struct Scenario {
  std::string name;
  Profile profile;
  std::vector<std::string> protocols;
  std::size_t levels = 1024;
  std::string group = "test";
  std::string seed;
  DeliverySchedule delivery;
  std::optional<AttackSpec> attack;
  std::optional<TamperSpec> tamper;
  bool parallel_agents = false;

  explicit Scenario(Profile p) : profile(std::move(p)) {}
  EngineConfig engine_config(Backend backend) const;
};

Scenario parse_scenario(const Json& j);
/// Throws ScenarioError (with the offending field path, or the parser's
/// line and column for malformed JSON).
Scenario load_scenario(const std::string& path);

}  // namespace cakecut
