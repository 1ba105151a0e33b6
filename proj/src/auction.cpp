#include "cakecut/auction.hpp"

#include <algorithm>

namespace cakecut {

std::string bid_cell_context(std::string_view scope, std::size_t owner, std::size_t cell) {
  return std::string(scope) + "/bid/P" + std::to_string(owner + 1) + "/cell" + std::to_string(cell);
}

std::string bid_sum_context(std::string_view scope, std::size_t owner) {
  return std::string(scope) + "/bid/P" + std::to_string(owner + 1) + "/sum";
}

BidVector make_bid_vector(const GroupParams& gp, const Element& pk, std::size_t owner,
                          std::size_t level, std::size_t levels, Drbg& rng, std::string_view scope) {
  if (level >= levels) throw std::out_of_range("bid level outside the grid");
  BidVector bv;
  bv.owner = owner;
  bv.cells.reserve(levels);
  bv.bit_proofs.reserve(levels);
  std::vector<Scalar> randomness;
  randomness.reserve(levels);
  for (std::size_t j = 0; j < levels; ++j) {
    int bit = j == level ? 1 : 0;
    Scalar r = rng.below(gp.q);
    bv.cells.push_back(encrypt(gp, pk, bit, r));
    bv.bit_proofs.push_back(
        prove_bit(gp, pk, bv.cells.back(), bit, r, rng, bid_cell_context(scope, owner, j)));
    randomness.push_back(std::move(r));
  }
  bv.sum_proof = prove_sum_one(gp, pk, bv.cells, randomness, rng, bid_sum_context(scope, owner));
  return bv;
}

bool verify_bid_vector(const GroupParams& gp, const Element& pk, const BidVector& bv,
                       std::string_view scope) {
  if (bv.cells.empty() || bv.cells.size() != bv.bit_proofs.size()) return false;
  for (std::size_t j = 0; j < bv.cells.size(); ++j) {
    if (!verify_bit(gp, pk, bv.cells[j], bv.bit_proofs[j], bid_cell_context(scope, bv.owner, j))) {
      return false;
    }
  }
  return verify_sum_one(gp, pk, bv.cells, bv.sum_proof, bid_sum_context(scope, bv.owner));
}

std::vector<Ciphertext> suffix_tallies(const GroupParams& gp, std::span<const BidVector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("suffix_tallies needs at least one bid vector");
  const std::size_t levels = vectors.front().levels();
  for (const auto& v : vectors) {
    if (v.levels() != levels) throw std::invalid_argument("bid vectors disagree on the grid size");
  }
  std::vector<Ciphertext> tallies(levels, Ciphertext{1, 1});
  Ciphertext running{1, 1};
  for (std::size_t j = levels; j-- > 0;) {
    for (const auto& v : vectors) running = hom_add(gp, running, v.cells[j]);
    tallies[j] = running;
  }
  return tallies;
}

AuctionScan::AuctionScan(std::size_t levels, std::vector<bool> eligible)
    : levels_(levels), eligible_(std::move(eligible)), tally_cursor_(levels - 1) {
  if (levels == 0) throw std::invalid_argument("auction needs at least one level");
  if (std::none_of(eligible_.begin(), eligible_.end(), [](bool e) { return e; })) {
    throw std::invalid_argument("auction needs at least one eligible bidder");
  }
}

std::optional<IndicatorQuery> AuctionScan::next() const {
  if (winner_) return std::nullopt;
  if (!max_level_) return IndicatorQuery{IndicatorKind::Tally, tally_cursor_, 0};
  return IndicatorQuery{IndicatorKind::Cell, *max_level_, cell_cursor_};
}

void AuctionScan::skip_ineligible() {
  while (cell_cursor_ < eligible_.size() && !eligible_[cell_cursor_]) ++cell_cursor_;
}

void AuctionScan::record(bool nonzero) {
  auto q = next();
  if (!q) throw AuctionIntegrityError("auction already resolved");
  history_.emplace_back(*q, nonzero);
  if (q->kind == IndicatorKind::Tally) {
    if (nonzero) {
      max_level_ = tally_cursor_;
      cell_cursor_ = 0;
      skip_ineligible();
      if (cell_cursor_ == eligible_.size()) throw AuctionIntegrityError("no eligible bidder");
    } else if (tally_cursor_ == 0) {
      throw AuctionIntegrityError("every tally opened as zero; some bid vector is malformed");
    } else {
      --tally_cursor_;
    }
    return;
  }
  if (nonzero) {
    winner_ = cell_cursor_;
    return;
  }
  ++cell_cursor_;
  skip_ineligible();
  if (cell_cursor_ == eligible_.size()) {
    throw AuctionIntegrityError("no eligible bidder holds the maximum level");
  }
}

HonestParticipant::HonestParticipant(GroupParams gp, KeyShare key, Drbg rng)
    : gp_(std::move(gp)), key_(std::move(key)), rng_(std::move(rng)) {}

BlindedCiphertext HonestParticipant::blind(const Ciphertext& c, std::string_view context) {
  Drbg local = rng_.derive(player_context(context, key_.player));
  Scalar r = local.nonzero_below(gp_.q);
  return blind_exponentiate(gp_, key_.player, c, r, local, context);
}

DecryptionShare HonestParticipant::decrypt(const Ciphertext& c, std::string_view context) {
  Drbg local = rng_.derive(player_context(context, key_.player));
  return decrypt_share(gp_, c, key_, local, context);
}

std::string blind_context(std::string_view scope, std::size_t opening) {
  return std::string(scope) + "/open" + std::to_string(opening) + "/blind";
}

std::string share_context(std::string_view scope, std::size_t opening) {
  return std::string(scope) + "/open" + std::to_string(opening) + "/share";
}

Opening open_indicator(const GroupParams& gp, std::span<const PublicKeyShare> keys,
                       std::span<AuctionParticipant* const> participants, const IndicatorQuery& query,
                       const Ciphertext& input, std::string_view scope, std::size_t opening_index) {
  if (participants.size() != keys.size()) {
    throw std::invalid_argument("one participant per key share is required");
  }
  Opening o{query, input, {}, {}, false};
  Ciphertext current = input;
  const auto bctx = blind_context(scope, opening_index);
  const auto sctx = share_context(scope, opening_index);
  for (std::size_t i = 0; i < participants.size(); ++i) {
    const auto& ctx = bctx;
    auto b = participants[i]->blind(current, ctx);
    if (b.player != keys[i].player || !verify_blind(gp, current, b, ctx)) {
      throw ProofFailure(keys[i].player, "invalid blinding from P" + std::to_string(keys[i].player + 1));
    }
    current = b.value;
    o.blinds.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < participants.size(); ++i) {
    o.shares.push_back(participants[i]->decrypt(current, sctx));
  }
  o.nonzero = combine_decrypt(gp, current, keys, o.shares, sctx) != 1;
  return o;
}

bool verify_opening(const GroupParams& gp, std::span<const PublicKeyShare> keys, const Opening& o,
                    std::string_view scope, std::size_t opening_index) {
  if (o.blinds.size() != keys.size() || o.shares.size() != keys.size()) return false;
  Ciphertext current = o.input;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (o.blinds[i].player != keys[i].player) return false;
    if (!verify_blind(gp, current, o.blinds[i], blind_context(scope, opening_index))) return false;
    current = o.blinds[i].value;
  }
  try {
    return (combine_decrypt(gp, current, keys, o.shares, share_context(scope, opening_index)) != 1) ==
           o.nonzero;
  } catch (const ProofFailure&) {
    return false;
  }
}

MaxResult resolve_max(const GroupParams& gp, std::span<const Ciphertext> tallies,
                      std::span<const PublicKeyShare> keys,
                      std::span<AuctionParticipant* const> participants, std::string_view scope) {
  AuctionScan scan(tallies.size(), std::vector<bool>(keys.size(), true));
  MaxResult out{0, {}};
  while (!scan.max_level()) {
    auto q = *scan.next();
    out.openings.push_back(open_indicator(gp, keys, participants, q, tallies[q.level], scope,
                                          out.openings.size()));
    scan.record(out.openings.back().nonzero);
  }
  out.max_level = *scan.max_level();
  return out;
}

WinnerResult resolve_winner(const GroupParams& gp, std::span<const BidVector> vectors,
                            std::size_t max_level, const std::vector<bool>& eligible,
                            std::span<const PublicKeyShare> keys,
                            std::span<AuctionParticipant* const> participants,
                            std::string_view scope, std::size_t first_opening) {
  if (vectors.empty() || max_level >= vectors.front().levels()) {
    throw std::invalid_argument("resolve_winner needs vectors covering max_level");
  }
  WinnerResult out{0, {}};
  std::size_t counter = first_opening;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!eligible.at(i)) continue;
    IndicatorQuery q{IndicatorKind::Cell, max_level, i};
    out.openings.push_back(
        open_indicator(gp, keys, participants, q, vectors[i].cells[max_level], scope, counter++));
    if (out.openings.back().nonzero) {
      out.winner = i;
      return out;
    }
  }
  throw AuctionIntegrityError("no eligible bidder holds the maximum level");
}

AuctionResult run_auction(const GroupParams& gp, const Element& pk,
                          std::span<const PublicKeyShare> keys, std::span<const BidVector> vectors,
                          const std::vector<bool>& eligible,
                          std::span<AuctionParticipant* const> participants, std::string_view scope) {
  if (vectors.size() != keys.size() || eligible.size() != keys.size()) {
    throw std::invalid_argument("one bid vector and eligibility flag per key holder");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].owner != keys[i].player || !verify_bid_vector(gp, pk, vectors[i], scope)) {
      throw ProofFailure(keys[i].player,
                         "bid vector of P" + std::to_string(keys[i].player + 1) + " fails verification");
    }
  }
  // Only eligible bidders enter the tallies.
  std::vector<BidVector> bidding;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (eligible[i]) bidding.push_back(vectors[i]);
  }
  if (bidding.empty()) throw std::invalid_argument("no eligible bidder");
  auto tallies = suffix_tallies(gp, bidding);
  auto max = resolve_max(gp, tallies, keys, participants, scope);
  auto win = resolve_winner(gp, vectors, max.max_level, eligible, keys, participants, scope,
                            max.openings.size());
  AuctionResult out{max.max_level, win.winner, std::move(max.openings)};
  for (auto& o : win.openings) out.evidence.push_back(std::move(o));
  return out;
}

}  // namespace cakecut
