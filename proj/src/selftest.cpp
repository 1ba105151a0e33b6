#include "cakecut/selftest.hpp"

#include "cakecut/analytics.hpp"
#include "cakecut/transcript.hpp"

namespace cakecut {

Profile example_profile() {
  auto r = [](const char* s) { return parse_rational(s); };
  return Profile({Density({{r("5/6"), r("4/5")}, {r("1"), r("2")}}), Density::uniform(),
                  Density({{r("1/3"), r("2")}, {r("1"), r("1/2")}})});
}

namespace {

Rational q(const char* s) { return parse_rational(s); }

template <class T>
SelfCheck expect(std::string name, const T& got, const T& want) {
  if (got == want) return {std::move(name), true, ""};
  return {std::move(name), false, "mismatch"};
}

SelfCheck expect_rational(std::string name, const Rational& got, const Rational& want) {
  return {std::move(name), got == want, "got " + to_string(got) + ", want " + to_string(want)};
}

}  // namespace

std::vector<SelfCheck> run_selftest() {
  std::vector<SelfCheck> out;
  const Profile p = example_profile();

  auto e = run_endriss(p);
  const auto& r1 = e.rounds.at(0).declared;
  out.push_back(expect_rational("endriss round 1 P1 declares 5/6", *r1[0], q("5/6")));
  out.push_back(expect_rational("endriss round 1 P2 declares 2/3", *r1[1], q("2/3")));
  out.push_back(expect_rational("endriss round 1 P3 declares 1/3", *r1[2], q("1/3")));
  const auto& r2 = e.rounds.at(1).declared;
  out.push_back(expect_rational("endriss round 2 P2 declares 5/12", *r2[1], q("5/12")));
  out.push_back(expect_rational("endriss round 2 P3 declares 11/48", *r2[2], q("11/48")));
  Allocation want(3);
  want.pieces = {{Interval{q("5/6"), q("1")}}, {Interval{q("5/12"), q("5/6")}}, {Interval{q("0"), q("5/12")}}};
  out.push_back(expect("endriss allocation", e.allocation, want));

  auto atk = endriss_leak_attack(p, 1);
  out.push_back(expect_rational("leak attack: P2 honest utility", atk.honest_utility, q("5/12")));
  out.push_back(expect_rational("leak attack: P2 attack utility", atk.attack_utility, q("1/2")));

  auto sw = run_sgall_woeginger(p);
  out.push_back(expect_rational("endriss surplus", social_surplus(p, e.allocation), q("35/24")));
  out.push_back(expect_rational("sgall-woeginger surplus", social_surplus(p, sw.allocation), q("13/10")));

  ProtocolState st(3);
  out.push_back(expect("honest bid P1, K=1024", honest_bid(p.densities[0], st, 1024), std::size_t{853}));
  out.push_back(expect("honest bid P3, K=1024", honest_bid(p.densities[2], st, 1024), std::size_t{341}));

  const auto gp = GroupParams::test_group();
  Drbg rng("selftest");
  auto k3 = keygen_share(gp, 0, Scalar(3), rng);
  auto k5 = keygen_share(gp, 1, Scalar(5), rng);
  out.push_back(expect("g^3 mod 23", k3.pub.h, Element(8)));
  std::vector<PublicKeyShare> pubs{k3.pub, k5.pub};
  out.push_back(expect("joint key 2^8 mod 23", combine_pk(gp, pubs), Element(3)));
  Ciphertext c = encrypt(gp, Element(8), Scalar(1), Scalar(4));
  out.push_back(expect("Enc_8(1; r=4)", c, Ciphertext{16, 4}));
  auto share = decrypt_share(gp, c, k3, rng, "selftest");
  out.push_back(expect("decryption share 16^3 mod 23", share.value, Element(2)));
  std::vector<PublicKeyShare> one{k3.pub};
  std::vector<DecryptionShare> shares{share};
  out.push_back(expect("joint decryption gives g^1", combine_decrypt(gp, c, one, shares, "selftest"), Element(2)));

  EngineConfig cfg;
  cfg.seed = "selftest";
  auto run = run_protocol(p, cfg);
  bool same_winners = run.rounds.size() == e.rounds.size();
  for (std::size_t i = 0; same_winners && i < run.rounds.size(); ++i) {
    same_winners = run.rounds[i].winner == e.rounds[i].winner;
  }
  out.push_back({"crypto engine picks the endriss winners", same_winners, ""});
  auto v = verify_transcript(*run.transcript);
  out.push_back({"crypto transcript verifies", v.ok, v.ok ? "" : to_string(v.records.front())});
  out.push_back({"crypto transcript opens no losing bid", sealed_bid_violations(v.rounds).empty(), ""});
  return out;
}

}  // namespace cakecut
