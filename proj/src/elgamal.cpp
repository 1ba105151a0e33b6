#include "cakecut/elgamal.hpp"

namespace cakecut {

std::string keygen_context(std::size_t player) { return "keygen/P" + std::to_string(player + 1); }

std::string player_context(std::string_view base, std::size_t player) {
  return std::string(base) + "/P" + std::to_string(player + 1);
}

KeyShare keygen_share(const GroupParams& gp, std::size_t player, Drbg& rng) {
  return keygen_share(gp, player, rng.nonzero_below(gp.q), rng);
}

KeyShare keygen_share(const GroupParams& gp, std::size_t player, const Scalar& secret, Drbg& rng) {
  if (sgn(secret) <= 0 || secret >= gp.q) {
    throw std::invalid_argument("secret key share must lie in [1, q)");
  }
  Element h = gp.gpow(secret);
  SigmaProof proof = prove_dlog(gp, h, secret, rng, keygen_context(player));
  return KeyShare{player, secret, PublicKeyShare{player, h, std::move(proof)}};
}

bool verify_key_share(const GroupParams& gp, const PublicKeyShare& share) {
  return share.h != 1 && verify_dlog(gp, share.h, share.proof, keygen_context(share.player));
}

Element combine_pk(const GroupParams& gp, std::span<const PublicKeyShare> shares) {
  if (shares.empty()) throw std::invalid_argument("no key shares to combine");
  Element pk = 1;
  for (const auto& s : shares) {
    if (!verify_key_share(gp, s)) {
      throw ProofFailure(s.player, "key share of P" + std::to_string(s.player + 1) +
                                       " fails its proof of knowledge");
    }
    pk = gp.mul(pk, s.h);
  }
  return pk;
}

Ciphertext encrypt(const GroupParams& gp, const Element& pk, const Scalar& plaintext,
                   const Scalar& r) {
  return Ciphertext{gp.gpow(r), gp.mul(gp.gpow(plaintext), gp.pow(pk, r))};
}

Ciphertext hom_add(const GroupParams& gp, const Ciphertext& c1, const Ciphertext& c2) {
  return Ciphertext{gp.mul(c1.a, c2.a), gp.mul(c1.b, c2.b)};
}

Ciphertext hom_neg(const GroupParams& gp, const Ciphertext& c) {
  return Ciphertext{gp.inv(c.a), gp.inv(c.b)};
}

bool is_ciphertext(const GroupParams& gp, const Ciphertext& c) {
  return gp.is_element(c.a) && gp.is_element(c.b);
}

namespace {

Scalar bit_challenge(const GroupParams& gp, const Element& pk, const Ciphertext& c,
                     const std::vector<Element>& commitments, std::string_view context) {
  return ChallengeHasher(gp, ProofKind::BitOr, context)
      .element(pk).element(c.a).element(c.b)
      .elements(commitments)
      .challenge();
}

}  // namespace

SigmaProof prove_bit(const GroupParams& gp, const Element& pk, const Ciphertext& c, int bit,
                     const Scalar& r, Drbg& rng, std::string_view context) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("prove_bit needs bit in {0,1}");
  // Branch j claims (A, B / g^j) = (g^r, PK^r).
  const int real = bit;
  const int fake = 1 - bit;
  Element b_over[2] = {c.b, gp.div(c.b, gp.g)};

  Scalar ch[2], z[2];
  Element a[2], b[2];

  ch[fake] = rng.below(gp.q);
  z[fake] = rng.below(gp.q);
  a[fake] = gp.div(gp.gpow(z[fake]), gp.pow(c.a, ch[fake]));
  b[fake] = gp.div(gp.pow(pk, z[fake]), gp.pow(b_over[fake], ch[fake]));

  Scalar t = rng.below(gp.q);
  a[real] = gp.gpow(t);
  b[real] = gp.pow(pk, t);

  std::vector<Element> commitments{a[0], b[0], a[1], b[1]};
  Scalar total = bit_challenge(gp, pk, c, commitments, context);
  ch[real] = gp.reduce(total - ch[fake]);
  z[real] = gp.reduce(t + ch[real] * r);
  return SigmaProof{ProofKind::BitOr, std::move(commitments), {ch[0], ch[1]}, {z[0], z[1]}};
}

bool verify_bit(const GroupParams& gp, const Element& pk, const Ciphertext& c,
                const SigmaProof& proof, std::string_view context) {
  if (proof.kind != ProofKind::BitOr || !well_formed(gp, proof, 4, 2, 2)) return false;
  if (!gp.is_element(pk) || !is_ciphertext(gp, c)) return false;
  const auto& cm = proof.commitments;
  Scalar total = bit_challenge(gp, pk, c, cm, context);
  if (gp.reduce(proof.challenges[0] + proof.challenges[1]) != total) return false;
  Element b_over[2] = {c.b, gp.div(c.b, gp.g)};
  for (int j = 0; j < 2; ++j) {
    const auto& ch = proof.challenges[j];
    const auto& z = proof.responses[j];
    if (gp.gpow(z) != gp.mul(cm[2 * j], gp.pow(c.a, ch))) return false;
    if (gp.pow(pk, z) != gp.mul(cm[2 * j + 1], gp.pow(b_over[j], ch))) return false;
  }
  return true;
}

Ciphertext sum(const GroupParams& gp, std::span<const Ciphertext> cs) {
  Ciphertext acc{1, 1};
  for (const auto& c : cs) acc = hom_add(gp, acc, c);
  return acc;
}

namespace {

EqualDlogStatement sum_one_statement(const GroupParams& gp, const Element& pk,
                                     std::span<const Ciphertext> cells) {
  Ciphertext total = sum(gp, cells);
  return EqualDlogStatement{gp.g, total.a, pk, gp.div(total.b, gp.g)};
}

}  // namespace

SigmaProof prove_sum_one(const GroupParams& gp, const Element& pk, std::span<const Ciphertext> cells,
                         std::span<const Scalar> randomness, Drbg& rng, std::string_view context) {
  if (cells.size() != randomness.size() || cells.empty()) {
    throw std::invalid_argument("prove_sum_one needs one randomness value per cell");
  }
  Scalar total_r = 0;
  for (const auto& r : randomness) total_r += r;
  return prove_equal_dlog(gp, ProofKind::ChaumPedersen, sum_one_statement(gp, pk, cells),
                          gp.reduce(total_r), rng, context);
}

bool verify_sum_one(const GroupParams& gp, const Element& pk, std::span<const Ciphertext> cells,
                    const SigmaProof& proof, std::string_view context) {
  if (cells.empty()) return false;
  for (const auto& c : cells) {
    if (!is_ciphertext(gp, c)) return false;
  }
  return verify_equal_dlog(gp, ProofKind::ChaumPedersen, sum_one_statement(gp, pk, cells), proof,
                           context);
}

DecryptionShare decrypt_share(const GroupParams& gp, const Ciphertext& c, const KeyShare& ks,
                              Drbg& rng, std::string_view context) {
  Element value = gp.pow(c.a, ks.secret);
  EqualDlogStatement st{gp.g, ks.pub.h, c.a, value};
  return DecryptionShare{ks.player, value,
                         prove_equal_dlog(gp, ProofKind::DecryptionShare, st, ks.secret, rng,
                                          player_context(context, ks.player))};
}

bool verify_decryption_share(const GroupParams& gp, const Element& player_h, const Ciphertext& c,
                             const DecryptionShare& share, std::string_view context) {
  EqualDlogStatement st{gp.g, player_h, c.a, share.value};
  return verify_equal_dlog(gp, ProofKind::DecryptionShare, st, share.proof,
                           player_context(context, share.player));
}

Element combine_decrypt(const GroupParams& gp, const Ciphertext& c,
                        std::span<const PublicKeyShare> keys,
                        std::span<const DecryptionShare> shares, std::string_view context) {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i >= shares.size() || shares[i].player != keys[i].player) {
      throw ProofFailure(keys[i].player,
                         "missing decryption share from P" + std::to_string(keys[i].player + 1));
    }
    if (!verify_decryption_share(gp, keys[i].h, c, shares[i], context)) {
      throw ProofFailure(keys[i].player,
                         "invalid decryption share from P" + std::to_string(keys[i].player + 1));
    }
  }
  if (shares.size() != keys.size()) throw std::invalid_argument("more shares than key holders");
  Element denom = 1;
  for (const auto& s : shares) denom = gp.mul(denom, s.value);
  return gp.div(c.b, denom);
}

BlindedCiphertext blind_exponentiate(const GroupParams& gp, std::size_t player,
                                     const Ciphertext& c, const Scalar& r, Drbg& rng,
                                     std::string_view context) {
  if (sgn(gp.reduce(r)) == 0) throw std::invalid_argument("blinding exponent must be nonzero mod q");
  Ciphertext out{gp.pow(c.a, r), gp.pow(c.b, r)};
  EqualDlogStatement st{c.a, out.a, c.b, out.b};
  return BlindedCiphertext{player, out,
                           prove_equal_dlog(gp, ProofKind::Exponentiation, st, gp.reduce(r), rng,
                                            player_context(context, player))};
}

bool verify_blind(const GroupParams& gp, const Ciphertext& input, const BlindedCiphertext& out,
                  std::string_view context) {
  if (!is_ciphertext(gp, input) || !is_ciphertext(gp, out.value)) return false;
  // In a prime-order group x^r == 1 iff x == 1 or r == 0 (mod q).
  if ((input.a == 1) != (out.value.a == 1) || (input.b == 1) != (out.value.b == 1)) return false;
  EqualDlogStatement st{input.a, out.value.a, input.b, out.value.b};
  return verify_equal_dlog(gp, ProofKind::Exponentiation, st, out.proof,
                           player_context(context, out.player));
}

}  // namespace cakecut
