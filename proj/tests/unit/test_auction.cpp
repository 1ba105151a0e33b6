#include "cakecut/auction.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace cakecut;

namespace {

struct Setup {
  GroupParams gp = GroupParams::test_group();
  std::vector<KeyShare> keys;
  std::vector<PublicKeyShare> pubs;
  Element pk;
  std::vector<HonestParticipant> honest;

  Setup(std::size_t n, const std::string& seed) {
    Drbg root(seed);
    for (std::size_t i = 0; i < n; ++i) {
      Drbg r = root.derive("k" + std::to_string(i));
      keys.push_back(keygen_share(gp, i, r));
      pubs.push_back(keys.back().pub);
      honest.emplace_back(gp, keys.back(), root.derive("p" + std::to_string(i)));
    }
    pk = combine_pk(gp, pubs);
  }
  std::vector<AuctionParticipant*> parts() {
    std::vector<AuctionParticipant*> out;
    for (auto& h : honest) out.push_back(&h);
    return out;
  }
};

// Corrupts the second component of every blind, so its proof no longer verifies.
class CheatingBlinder : public HonestParticipant {
 public:
  using HonestParticipant::HonestParticipant;
  BlindedCiphertext blind(const Ciphertext& c, std::string_view context) override {
    auto b = HonestParticipant::blind(c, context);
    b.value.b = b.value.a;
    return b;
  }
};

}  // namespace

TEST_CASE("auction scan order") {
  AuctionScan s(4, {true, true, true});
  std::vector<IndicatorQuery> seen;
  // Bids 1, 2, 2: tallies T3=0, T2=2 -> max 2, cells at 2: P1 no, P2 yes.
  const std::vector<std::size_t> bids{1, 2, 2};
  while (!s.done()) {
    auto qy = *s.next();
    seen.push_back(qy);
    if (qy.kind == IndicatorKind::Tally) {
      s.record(std::count_if(bids.begin(), bids.end(), [&](auto b) { return b >= qy.level; }) > 0);
    } else {
      s.record(bids[qy.player] == qy.level);
    }
  }
  CHECK(*s.max_level() == 2);
  CHECK(*s.winner() == 1);
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == IndicatorQuery{IndicatorKind::Tally, 3, 0});
  CHECK(seen[2] == IndicatorQuery{IndicatorKind::Cell, 2, 0});
}

TEST_CASE("auction scan skips ineligible bidders and detects inconsistency") {
  AuctionScan s(2, {false, true});
  CHECK(s.next()->kind == IndicatorKind::Tally);
  s.record(true);
  CHECK(s.next()->player == 1);
  AuctionScan bad(2, {true});
  bad.record(true);
  CHECK_THROWS_AS(bad.record(false), AuctionIntegrityError);
}

TEST_CASE("bid vectors") {
  Setup s(2, "bv");
  Drbg rng("bv/bid");
  auto bv = make_bid_vector(s.gp, s.pk, 0, 2, 5, rng, "sc");
  CHECK(bv.levels() == 5);
  CHECK(verify_bid_vector(s.gp, s.pk, bv, "sc"));
  CHECK_FALSE(verify_bid_vector(s.gp, s.pk, bv, "other"));
  CHECK_THROWS_AS(make_bid_vector(s.gp, s.pk, 0, 5, 5, rng, "sc"), std::out_of_range);
  std::vector<BidVector> empty;
  CHECK_THROWS_AS(suffix_tallies(s.gp, empty), std::invalid_argument);
}

TEST_CASE("run_auction matches plaintext argmax exhaustively for small cases") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Setup s(n, "ex" + std::to_string(n));
    for (std::size_t K = 1; K <= 4; ++K) {
      std::vector<std::size_t> bids(n, 0);
      while (true) {
        Drbg rng("bids");
        std::vector<BidVector> vs;
        for (std::size_t i = 0; i < n; ++i) vs.push_back(make_bid_vector(s.gp, s.pk, i, bids[i], K, rng, "x"));
        std::vector<bool> eligible(n, true);
        auto parts = s.parts();
        auto res = run_auction(s.gp, s.pk, s.pubs, vs, eligible, parts, "x");
        auto want = oracle::argmax(bids, eligible);
        CHECK(res.max_level == want.max_level);
        CHECK(res.winner == want.winner);
        std::size_t d = 0;
        while (d < n && ++bids[d] == K) bids[d++] = 0;
        if (d == n) break;
      }
    }
  }
}

TEST_CASE("a cheating blinder is named") {
  Setup s(3, "cheat");
  CheatingBlinder cheat(s.gp, s.keys[1], Drbg("c"));
  auto parts = s.parts();
  parts[1] = &cheat;
  Drbg rng("cheat/bids");
  std::vector<BidVector> vs;
  for (std::size_t i = 0; i < 3; ++i) vs.push_back(make_bid_vector(s.gp, s.pk, i, i, 3, rng, "x"));
  try {
    run_auction(s.gp, s.pk, s.pubs, vs, {true, true, true}, parts, "x");
    FAIL("expected ProofFailure");
  } catch (const ProofFailure& e) {
    CHECK(e.player() == 1);
  }
}

TEST_CASE("an ineligible high bid does not set the maximum") {
  Setup s(3, "inel");
  Drbg rng("inel/bids");
  std::vector<BidVector> vs;
  const std::vector<std::size_t> bids{3, 1, 2};
  for (std::size_t i = 0; i < 3; ++i) vs.push_back(make_bid_vector(s.gp, s.pk, i, bids[i], 4, rng, "x"));
  auto parts = s.parts();
  auto res = run_auction(s.gp, s.pk, s.pubs, vs, {false, true, true}, parts, "x");
  CHECK(res.max_level == 2);
  CHECK(res.winner == 2);
}
