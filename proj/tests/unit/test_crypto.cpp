#include "cakecut/codec.hpp"
#include "cakecut/elgamal.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace cakecut;

TEST_CASE("group parameters") {
  auto t = GroupParams::test_group();
  CHECK_NOTHROW(t.validate());
  CHECK_NOTHROW(GroupParams::modp2048().validate());
  CHECK(t.gpow(3) == 8);
  CHECK(t.is_element(3));
  CHECK_FALSE(t.is_element(5));
  CHECK_THROWS_AS(GroupParams::named("p256"), std::invalid_argument);
  GroupParams bad = t;
  bad.g = 5;
  CHECK_THROWS(bad.validate());
  for (std::uint64_t e = 0; e < 30; ++e) CHECK(t.gpow(e) == oracle::naive_pow(2, e, 23));
}

TEST_CASE("hex encoding is strict") {
  CHECK(to_hex(255, 4) == "00ff");
  CHECK(from_hex("00ff", 4) == 255);
  CHECK_THROWS(from_hex("00FF", 4));
  CHECK_THROWS(from_hex("0ff", 4));
  CHECK_THROWS(to_hex(65536, 4));
}

TEST_CASE("drbg is deterministic and label-separated") {
  Drbg a("seed"), b("seed");
  CHECK(a.next_u64() == b.next_u64());
  Drbg c = Drbg("seed").derive("x"), d = Drbg("seed").derive("y");
  CHECK(c.next_u64() != d.next_u64());
  Drbg r("range");
  for (int i = 0; i < 200; ++i) {
    BigInt v = r.nonzero_below(11);
    CHECK(v >= 1);
    CHECK(v < 11);
  }
  CHECK(hex(sha256("abc")) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("deterministic vectors in the test group") {
  auto gp = GroupParams::test_group();
  Drbg rng("vec");
  auto k3 = keygen_share(gp, 0, Scalar(3), rng);
  auto k5 = keygen_share(gp, 1, Scalar(5), rng);
  CHECK(k3.pub.h == 8);
  CHECK(k5.pub.h == 9);
  std::vector<PublicKeyShare> pubs{k3.pub, k5.pub};
  Element pk = combine_pk(gp, pubs);
  CHECK(pk == 3);
  CHECK(encrypt(gp, 8, 1, 4) == Ciphertext{16, 4});
  Ciphertext c = encrypt(gp, pk, 1, 7);
  std::vector<DecryptionShare> shares{decrypt_share(gp, c, k3, rng, "v"), decrypt_share(gp, c, k5, rng, "v")};
  CHECK(combine_decrypt(gp, c, pubs, shares, "v") == 2);
  CHECK_THROWS_AS(keygen_share(gp, 0, Scalar(0), rng), std::invalid_argument);
  CHECK_THROWS_AS(keygen_share(gp, 0, Scalar(11), rng), std::invalid_argument);
}

TEST_CASE("homomorphic addition and negation") {
  auto gp = GroupParams::test_group();
  Drbg rng("hom");
  auto k = keygen_share(gp, 0, rng);
  std::vector<PublicKeyShare> pubs{k.pub};
  Element pk = combine_pk(gp, pubs);
  auto dec = [&](const Ciphertext& c) {
    std::vector<DecryptionShare> s{decrypt_share(gp, c, k, rng, "h")};
    return combine_decrypt(gp, c, pubs, s, "h");
  };
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      auto ca = encrypt(gp, pk, a, rng.below(gp.q)), cb = encrypt(gp, pk, b, rng.below(gp.q));
      CHECK(dec(hom_add(gp, ca, cb)) == oracle::naive_pow(2, a + b, 23));
      CHECK(gp.mul(dec(hom_neg(gp, ca)), dec(ca)) == 1);
    }
  }
}

TEST_CASE("sigma proofs verify and bind their context") {
  auto gp = GroupParams::test_group();
  Drbg rng("sigma");
  Element h = gp.gpow(7);
  auto p = prove_dlog(gp, h, 7, rng, "ctx");
  CHECK(verify_dlog(gp, h, p, "ctx"));
  CHECK(p.kind == ProofKind::DlogKnowledge);
  auto wrong_kind = p;
  wrong_kind.kind = ProofKind::BitOr;
  CHECK_FALSE(verify_dlog(gp, h, wrong_kind, "ctx"));
  CHECK_FALSE(well_formed(gp, p, 2, 1, 1));

  EqualDlogStatement st{gp.g, gp.gpow(4), 13, gp.pow(13, 4)};
  auto cp = prove_equal_dlog(gp, ProofKind::ChaumPedersen, st, 4, rng, "cp");
  CHECK(verify_equal_dlog(gp, ProofKind::ChaumPedersen, st, cp, "cp"));
  CHECK_FALSE(verify_equal_dlog(gp, ProofKind::DecryptionShare, st, cp, "cp"));
  EqualDlogStatement lie{gp.g, gp.gpow(4), 13, gp.pow(13, 5)};
  auto bad = prove_equal_dlog(gp, ProofKind::ChaumPedersen, lie, 4, rng, "cp");
  CHECK_FALSE(verify_equal_dlog(gp, ProofKind::ChaumPedersen, lie, bad, "cp"));

  auto big = GroupParams::modp2048();
  Drbg r2("sigma-2048");
  Scalar x = r2.nonzero_below(big.q);
  auto pb = prove_dlog(big, big.gpow(x), x, r2, "ctx");
  CHECK(verify_dlog(big, big.gpow(x), pb, "ctx"));
  CHECK_FALSE(verify_dlog(big, big.gpow(x), pb, "other"));
}

TEST_CASE("bit proofs, sum proofs, blinding") {
  for (const auto& gp : {GroupParams::test_group(), GroupParams::modp2048()}) {
    Drbg rng("bits/" + gp.name);
    auto k = keygen_share(gp, 0, rng);
    std::vector<PublicKeyShare> pubs{k.pub};
    Element pk = combine_pk(gp, pubs);
    for (int bit = 0; bit <= 1; ++bit) {
      Scalar r = rng.below(gp.q);
      auto c = encrypt(gp, pk, bit, r);
      CHECK(verify_bit(gp, pk, c, prove_bit(gp, pk, c, bit, r, rng, "b"), "b"));
    }
    Scalar r = rng.nonzero_below(gp.q);
    auto c2 = encrypt(gp, pk, 2, r);
    CHECK_FALSE(verify_bit(gp, pk, c2, prove_bit(gp, pk, c2, 1, r, rng, "b"), "b"));

    auto c = encrypt(gp, pk, 1, rng.below(gp.q));
    auto bl = blind_exponentiate(gp, 0, c, rng.nonzero_below(gp.q), rng, "bl");
    CHECK(verify_blind(gp, c, bl, "bl"));
    CHECK_THROWS_AS(blind_exponentiate(gp, 0, c, 0, rng, "bl"), std::invalid_argument);

    // Codec round trip.
    CHECK(decode_ciphertext(gp, encode(gp, c)) == c);
    CHECK(decode_proof(gp, encode(gp, bl.proof)) == bl.proof);
    CHECK_THROWS_AS(decode_element(gp, Json("zz")), CodecError);
  }
}
