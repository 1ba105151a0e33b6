#pragma once

// Sealed-bid maximum auction over unary-encoded encrypted bids.
//
// Each bidder posts K ciphertexts, exactly one of which encrypts 1 (at the
// bid level). Suffix tallies T_j count the bidders at or above level j. The
// maximum is found by opening zero/nonzero indicators of T_{K-1}, T_{K-2}, ...
// until one is nonzero; the winner is found by opening the cells of eligible
// bidders at that level in index order until one is nonzero. Every indicator
// is blinded by every player in turn and then jointly decrypted, so only
// "zero" or "nonzero" is ever learned.

#include "cakecut/elgamal.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cakecut {

struct BidVector {
  std::size_t owner = 0;
  std::vector<Ciphertext> cells;
  std::vector<SigmaProof> bit_proofs;
  SigmaProof sum_proof;

  std::size_t levels() const noexcept { return cells.size(); }
  bool operator==(const BidVector&) const = default;
};

/// Context string bound into a bid cell proof ("scope" identifies the auction).
std::string bid_cell_context(std::string_view scope, std::size_t owner, std::size_t cell);
std::string bid_sum_context(std::string_view scope, std::size_t owner);

/// Throws std::out_of_range unless level < levels.
BidVector make_bid_vector(const GroupParams& gp, const Element& pk, std::size_t owner,
                          std::size_t level, std::size_t levels, Drbg& rng, std::string_view scope);

bool verify_bid_vector(const GroupParams& gp, const Element& pk, const BidVector& bv,
                       std::string_view scope);

/// T_j = sum over bidders and levels >= j. Throws std::invalid_argument on an
/// empty input or mismatched vector lengths.
std::vector<Ciphertext> suffix_tallies(const GroupParams& gp, std::span<const BidVector> vectors);

enum class IndicatorKind { Tally, Cell };

struct IndicatorQuery {
  IndicatorKind kind;
  std::size_t level;
  std::size_t player = 0;  // owner of the cell for Cell queries

  bool operator==(const IndicatorQuery&) const = default;
};

class AuctionIntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Order in which indicators are opened. Pure logic, shared by the direct
/// API below and the bulletin-board engine.
class AuctionScan {
 public:
  AuctionScan(std::size_t levels, std::vector<bool> eligible);

  /// Next indicator to open, or nullopt once the winner is known.
  std::optional<IndicatorQuery> next() const;
  /// Feeds the result of opening next(). Throws AuctionIntegrityError when
  /// the outcomes are inconsistent (no eligible winner at the max level).
  void record(bool nonzero);

  bool done() const noexcept { return winner_.has_value(); }
  std::optional<std::size_t> max_level() const noexcept { return max_level_; }
  std::optional<std::size_t> winner() const noexcept { return winner_; }
  const std::vector<std::pair<IndicatorQuery, bool>>& history() const noexcept { return history_; }

 private:
  std::size_t levels_;
  std::vector<bool> eligible_;
  std::size_t tally_cursor_;
  std::size_t cell_cursor_ = 0;
  std::optional<std::size_t> max_level_;
  std::optional<std::size_t> winner_;
  std::vector<std::pair<IndicatorQuery, bool>> history_;

  void skip_ineligible();
};

/// One player's side of a joint opening.
class AuctionParticipant {
 public:
  virtual ~AuctionParticipant() = default;
  virtual std::size_t index() const = 0;
  virtual BlindedCiphertext blind(const Ciphertext& c, std::string_view context) = 0;
  virtual DecryptionShare decrypt(const Ciphertext& c, std::string_view context) = 0;
};

class HonestParticipant : public AuctionParticipant {
 public:
  HonestParticipant(GroupParams gp, KeyShare key, Drbg rng);

  std::size_t index() const override { return key_.player; }
  const KeyShare& key() const noexcept { return key_; }
  BlindedCiphertext blind(const Ciphertext& c, std::string_view context) override;
  DecryptionShare decrypt(const Ciphertext& c, std::string_view context) override;

 private:
  GroupParams gp_;
  KeyShare key_;
  Drbg rng_;
};

std::string blind_context(std::string_view scope, std::size_t opening);
std::string share_context(std::string_view scope, std::size_t opening);

struct Opening {
  IndicatorQuery query;
  Ciphertext input;
  std::vector<BlindedCiphertext> blinds;  // chained in player order
  std::vector<DecryptionShare> shares;    // on the last blind, in player order
  bool nonzero = false;
};

/// Blind chain followed by joint decryption of one indicator. Throws
/// ProofFailure naming the first player whose contribution fails.
Opening open_indicator(const GroupParams& gp, std::span<const PublicKeyShare> keys,
                       std::span<AuctionParticipant* const> participants, const IndicatorQuery& query,
                       const Ciphertext& input, std::string_view scope, std::size_t opening_index);

/// Re-checks an opening from public data only.
bool verify_opening(const GroupParams& gp, std::span<const PublicKeyShare> keys, const Opening& o,
                    std::string_view scope, std::size_t opening_index);

struct MaxResult {
  std::size_t max_level;
  std::vector<Opening> openings;
};

MaxResult resolve_max(const GroupParams& gp, std::span<const Ciphertext> tallies,
                      std::span<const PublicKeyShare> keys,
                      std::span<AuctionParticipant* const> participants, std::string_view scope);

struct WinnerResult {
  std::size_t winner;
  std::vector<Opening> openings;
};

/// Scans eligible bidders' cells at max_level in index order. `first_opening`
/// continues the opening numbering after resolve_max.
WinnerResult resolve_winner(const GroupParams& gp, std::span<const BidVector> vectors,
                            std::size_t max_level, const std::vector<bool>& eligible,
                            std::span<const PublicKeyShare> keys,
                            std::span<AuctionParticipant* const> participants,
                            std::string_view scope, std::size_t first_opening);

struct AuctionResult {
  std::size_t max_level;
  std::size_t winner;
  std::vector<Opening> evidence;
};

/// Verifies every vector (ProofFailure names the owner), then resolves the
/// maximum and the winner.
AuctionResult run_auction(const GroupParams& gp, const Element& pk,
                          std::span<const PublicKeyShare> keys, std::span<const BidVector> vectors,
                          const std::vector<bool>& eligible,
                          std::span<AuctionParticipant* const> participants, std::string_view scope);

}  // namespace cakecut
