#pragma once

// Cryptographic moving-knife protocol.
//
// n-1 rounds. In each round every still-eligible player bids its honest cut
// point of the remaining cake [0, x], quantized onto a K-cell grid over
// [0, x]; a sealed-bid maximum auction picks the highest bid (lowest index on
// ties); [c, x] is marked for the winner, who stays in the protocol as a
// key holder but can no longer win. The last eligible player is marked
// [0, x]. Pieces are handed out only at the end, and pieces of players caught
// posting an invalid message are withheld.

#include "cakecut/auction.hpp"
#include "cakecut/board.hpp"
#include "cakecut/refproto.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cakecut {

enum class Backend {
  PlaintextExact,      // trusted maximum over exact rational bids
  PlaintextQuantized,  // trusted maximum over grid levels; mirrors the crypto backend
  Crypto,              // secure auction over the bulletin board
};

const char* to_string(Backend b);
Backend backend_from_string(std::string_view s);

/// Grid of `levels` equal cells over the remaining cake [0, x].
struct RoundGrid {
  Rational right_end;
  std::size_t levels;

  /// Cell holding y (floor), clamped to levels - 1.
  std::size_t level_of(const Rational& y) const;
  /// Marked cut for a winning level: the midpoint of the cell.
  Rational cut_of(std::size_t level) const;
  Rational cell_width() const { return right_end / Rational(levels); }
};

struct ProtocolState {
  std::size_t n;
  std::size_t remaining;                       // k
  Rational right_end;                          // x
  std::vector<std::optional<Interval>> marked; // per player
  std::vector<bool> eligible;
  std::vector<Rational> cuts;

  explicit ProtocolState(std::size_t players);

  bool finished() const noexcept { return remaining == 1; }
  /// Marks [cut, x] for the winner and shrinks the cake to [0, cut].
  void mark(PlayerIndex winner, const Rational& cut);
  PlayerIndex last_player() const;
  /// Requires finished(); the last eligible player receives [0, x].
  Allocation allocation(const std::vector<bool>& withheld) const;
};

/// Grid level of this player's honest cut point in the current round.
std::size_t honest_bid(const Density& d, const ProtocolState& state, std::size_t levels);

struct MisbehaviorRecord {
  std::optional<PlayerIndex> player;  // nullopt for unattributable integrity failures
  std::size_t round = 0;
  std::string step;
  std::optional<std::size_t> seq;     // offending board entry
  std::string check;                  // failed verification tag
  std::string detail;

  bool operator==(const MisbehaviorRecord&) const = default;
};

std::string to_string(const MisbehaviorRecord& r);

struct RoundOutcome {
  std::size_t round;
  std::size_t remaining;
  Rational right_end;
  PlayerIndex winner;
  std::optional<std::size_t> level;  // winning grid level (quantized backends)
  Rational cut;
  std::vector<std::pair<IndicatorQuery, bool>> opened;  // crypto backend only

  bool operator==(const RoundOutcome&) const = default;
};

/// One round with a trusted maximum (the plaintext backends).
RoundOutcome run_plaintext_round(ProtocolState& state, const Profile& p, Backend backend,
                                 std::size_t levels);

/// Public state machine of the crypto backend. Consumes bulletin-board
/// entries in sequence; needs no secrets, so the same code drives a live run
/// and an offline transcript check.
class ProtocolMachine {
 public:
  struct Demand {
    PlayerIndex player;
    Step step;
    std::size_t round;
    std::size_t opening;

    bool operator==(const Demand&) const = default;
  };

  ProtocolMachine(GroupParams gp, std::size_t players, std::size_t levels);

  /// Processes one entry; returns the misbehavior it revealed (if any).
  /// Rejected entries do not advance the protocol.
  std::vector<MisbehaviorRecord> consume(const BoardEntry& e);

  /// Messages the protocol is waiting for right now.
  std::vector<Demand> pending() const;
  bool done() const noexcept { return phase_ == Phase::Done; }

  const GroupParams& group() const noexcept { return gp_; }
  std::size_t levels() const noexcept { return levels_; }
  const ProtocolState& state() const noexcept { return state_; }
  std::size_t round() const noexcept { return round_; }
  const Element& public_key() const noexcept { return pk_; }
  const std::vector<PublicKeyShare>& key_shares() const noexcept { return keys_; }
  /// Ciphertext the next blinder must exponentiate, or that sharers must decrypt.
  const Ciphertext& current_indicator() const noexcept { return current_; }

  const std::vector<RoundOutcome>& rounds() const noexcept { return rounds_; }
  const std::vector<MisbehaviorRecord>& misbehavior() const noexcept { return records_; }
  std::vector<bool> offenders() const;
  /// Requires done().
  Allocation allocation() const;

  static std::string scope(std::size_t round) { return "r" + std::to_string(round); }

 private:
  enum class Phase { Keygen, Bidding, Blinding, Sharing, Done };

  GroupParams gp_;
  std::size_t n_;
  std::size_t levels_;
  Phase phase_ = Phase::Keygen;
  ProtocolState state_;
  std::size_t round_ = 0;

  std::vector<std::optional<PublicKeyShare>> key_slots_;
  std::vector<PublicKeyShare> keys_;
  Element pk_ = 1;

  std::vector<std::optional<BidVector>> bids_;
  std::vector<Ciphertext> tallies_;
  std::optional<AuctionScan> scan_;
  std::size_t opening_ = 0;
  Ciphertext current_{1, 1};
  std::size_t next_blinder_ = 0;
  std::vector<std::optional<DecryptionShare>> shares_;

  std::vector<RoundOutcome> rounds_;
  std::vector<MisbehaviorRecord> records_;

  MisbehaviorRecord reject(const BoardEntry& e, std::string check, std::string detail);
  bool demanded(const BoardMessage& m) const;
  void start_round();
  void start_opening();
  void finish_opening();
};

/// Honest simulated player: holds its density and key share, and answers
/// whatever the machine currently demands of it. All randomness is derived
/// from the player's seed and the message's position in the protocol, so the
/// content of every message is independent of delivery order.
class PlayerAgent {
 public:
  PlayerAgent(GroupParams gp, PlayerIndex index, Density density, std::size_t levels, Drbg rng);

  BoardMessage respond(const ProtocolMachine::Demand& d, const ProtocolMachine& m);
  PlayerIndex index() const noexcept { return index_; }

 private:
  GroupParams gp_;
  PlayerIndex index_;
  Density density_;
  std::size_t levels_;
  Drbg rng_;
  std::optional<KeyShare> key_;
};

struct DeliverySchedule {
  enum class Mode { Fifo, Reverse, Random };
  Mode mode = Mode::Fifo;
  std::uint64_t seed = 0;
};

/// Corrupts the message that would become board entry `seq` while in transit.
struct TamperSpec {
  std::size_t seq;
  std::string field;  // "proof" or "payload"
};

/// Alters one field of a message so that its verification fails.
BoardMessage tamper_message(const GroupParams& gp, BoardMessage m, std::string_view field);

struct EngineConfig {
  Backend backend = Backend::Crypto;
  std::size_t levels = 1024;
  GroupParams group = GroupParams::test_group();
  std::string seed = "0";
  DeliverySchedule delivery;
  std::optional<TamperSpec> tamper;
  bool parallel_agents = false;
};

struct Transcript;

struct ProtocolRun {
  Allocation allocation;
  std::vector<RoundOutcome> rounds;
  std::vector<MisbehaviorRecord> misbehavior;
  std::shared_ptr<const Transcript> transcript;  // crypto backend only
  std::vector<std::size_t> delivery_order;       // author of each board entry

  std::size_t cut_count() const noexcept { return rounds.size(); }
};

/// Runs the whole protocol. Throws std::invalid_argument for fewer than two
/// players, and std::logic_error on an unattributable stall.
ProtocolRun run_protocol(const Profile& p, const EngineConfig& config);

/// Openings that would leak more than the maximum and the winner: any
/// tally below the winning level, or any bid cell off the winning level.
/// Empty for every run of the protocol; used to audit transcripts.
std::vector<std::string> sealed_bid_violations(const std::vector<RoundOutcome>& rounds);

/// Dependency rule of one message kind on earlier messages.
struct StepRule {
  Step step;
  std::vector<Step> after;  // kinds that must already be on the board
  bool needs_simultaneous_post;  // true would mean a synchronous barrier
};

/// Step graph of one round, unrolled for n players; used to check that no
/// step needs two messages posted at the same instant.
std::vector<StepRule> step_graph();
/// True iff the unrolled message dependency graph for n players and the given
/// number of openings per round is acyclic and free of simultaneity barriers.
bool step_graph_is_asynchronous(std::size_t players, std::size_t openings);

}  // namespace cakecut
