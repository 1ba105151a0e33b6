#pragma once

// Runs a scenario's protocols and assembles the report.

#include "cakecut/analytics.hpp"
#include "cakecut/scenario.hpp"
#include "cakecut/transcript.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cakecut {

struct ProtocolReport {
  ProtocolSummary summary;
  Json rounds;  // protocol-specific trace
  std::vector<MisbehaviorRecord> misbehavior;
  std::optional<VerifyResult> verification;       // crypto only
  std::shared_ptr<const Transcript> transcript;   // crypto only
  double seconds = 0;  // wall clock; printed, never written to the report file
};

struct AttackReport {
  PlayerIndex attacker;
  LeakAttackResult result;
  /// Openings in an honest crypto run of the same profile that would reveal
  /// a losing bid; the leak attack needs them, the engine never produces any.
  std::vector<std::string> crypto_leaks;
};

struct Report {
  std::string scenario;
  std::size_t players = 0;
  std::size_t levels = 0;
  std::string group;
  std::vector<ProtocolReport> protocols;
  SurplusComparison comparison;
  std::optional<AttackReport> attack;

  bool verification_failed() const;
};

Report simulate(const Scenario& s);
AttackReport run_attack(const Scenario& s, PlayerIndex attacker);

Json to_json(const Report& r);
Json to_json(const AttackReport& a);

struct WrittenFiles {
  std::string report;
  std::vector<std::string> transcripts;
};

/// Writes <name>.report.json and, for crypto runs, <name>.crypto.transcript.jsonl.
WrittenFiles write_outputs(const Report& r, const std::string& dir);

}  // namespace cakecut
