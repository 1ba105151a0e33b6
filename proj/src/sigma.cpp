#include "cakecut/sigma.hpp"

#include <stdexcept>

namespace cakecut {

const char* to_string(ProofKind kind) {
  switch (kind) {
    case ProofKind::DlogKnowledge: return "dlog-knowledge";
    case ProofKind::ChaumPedersen: return "chaum-pedersen-equality";
    case ProofKind::BitOr: return "or-of-two";
    case ProofKind::DecryptionShare: return "correct-decryption-share";
    case ProofKind::Exponentiation: return "correct-exponentiation";
  }
  return "unknown";
}

ProofKind proof_kind_from_string(std::string_view tag) {
  for (auto k : {ProofKind::DlogKnowledge, ProofKind::ChaumPedersen, ProofKind::BitOr,
                 ProofKind::DecryptionShare, ProofKind::Exponentiation}) {
    if (tag == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown proof tag \"" + std::string(tag) + "\"");
}

ChallengeHasher::ChallengeHasher(const GroupParams& gp, ProofKind kind, std::string_view context)
    : gp_(gp) {
  buffer_ = "cakecut/fiat-shamir/v1|";
  buffer_ += to_string(kind);
  buffer_ += '|';
  buffer_ += to_hex(gp.p, gp.element_hex_width());
  buffer_ += to_hex(gp.q, gp.element_hex_width());
  buffer_ += to_hex(gp.g, gp.element_hex_width());
  buffer_ += '|';
  buffer_ += std::to_string(context.size());
  buffer_ += ':';
  buffer_ += context;
  buffer_ += '|';
}

ChallengeHasher& ChallengeHasher::element(const Element& e) {
  buffer_ += to_hex(e, gp_.element_hex_width());
  return *this;
}

ChallengeHasher& ChallengeHasher::elements(const std::vector<Element>& es) {
  for (const auto& e : es) element(e);
  return *this;
}

Digest ChallengeHasher::digest() const { return sha256(buffer_); }

Scalar ChallengeHasher::challenge() const {
  Digest d = digest();
  BigInt v;
  mpz_import(v.get_mpz_t(), d.size(), 1, 1, 1, 0, d.data());
  return gp_.reduce(v);
}

bool well_formed(const GroupParams& gp, const SigmaProof& proof, std::size_t commitments,
                 std::size_t challenges, std::size_t responses) {
  if (proof.commitments.size() != commitments || proof.challenges.size() != challenges ||
      proof.responses.size() != responses) {
    return false;
  }
  for (const auto& a : proof.commitments) {
    if (!gp.is_element(a)) return false;
  }
  auto scalar_ok = [&](const Scalar& s) { return sgn(s) >= 0 && s < gp.q; };
  for (const auto& c : proof.challenges) {
    if (!scalar_ok(c)) return false;
  }
  for (const auto& z : proof.responses) {
    if (!scalar_ok(z)) return false;
  }
  return true;
}

SigmaProof prove_dlog(const GroupParams& gp, const Element& h, const Scalar& x, Drbg& rng,
                      std::string_view context) {
  Scalar t = rng.below(gp.q);
  Element a = gp.gpow(t);
  Scalar c = ChallengeHasher(gp, ProofKind::DlogKnowledge, context).element(h).element(a).challenge();
  return SigmaProof{ProofKind::DlogKnowledge, {a}, {c}, {gp.reduce(t + c * x)}};
}

bool verify_dlog(const GroupParams& gp, const Element& h, const SigmaProof& proof,
                 std::string_view context) {
  if (proof.kind != ProofKind::DlogKnowledge || !well_formed(gp, proof, 1, 1, 1)) return false;
  if (!gp.is_element(h)) return false;
  const auto& a = proof.commitments[0];
  const auto& c = proof.challenges[0];
  if (c != ChallengeHasher(gp, ProofKind::DlogKnowledge, context).element(h).element(a).challenge()) {
    return false;
  }
  return gp.gpow(proof.responses[0]) == gp.mul(a, gp.pow(h, c));
}

namespace {

Scalar equal_dlog_challenge(const GroupParams& gp, ProofKind kind, const EqualDlogStatement& st,
                            const Element& a1, const Element& a2, std::string_view context) {
  return ChallengeHasher(gp, kind, context)
      .element(st.g1).element(st.h1).element(st.g2).element(st.h2)
      .element(a1).element(a2)
      .challenge();
}

void require_equal_dlog_kind(ProofKind kind) {
  if (kind == ProofKind::DlogKnowledge || kind == ProofKind::BitOr) {
    throw std::invalid_argument("not an equality-of-logs proof kind");
  }
}

}  // namespace

SigmaProof prove_equal_dlog(const GroupParams& gp, ProofKind kind, const EqualDlogStatement& st,
                            const Scalar& witness, Drbg& rng, std::string_view context) {
  require_equal_dlog_kind(kind);
  Scalar t = rng.below(gp.q);
  Element a1 = gp.pow(st.g1, t);
  Element a2 = gp.pow(st.g2, t);
  Scalar c = equal_dlog_challenge(gp, kind, st, a1, a2, context);
  return SigmaProof{kind, {a1, a2}, {c}, {gp.reduce(t + c * witness)}};
}

bool verify_equal_dlog(const GroupParams& gp, ProofKind kind, const EqualDlogStatement& st,
                       const SigmaProof& proof, std::string_view context) {
  require_equal_dlog_kind(kind);
  if (proof.kind != kind || !well_formed(gp, proof, 2, 1, 1)) return false;
  for (const auto* e : {&st.g1, &st.h1, &st.g2, &st.h2}) {
    if (!gp.is_element(*e)) return false;
  }
  const auto& a1 = proof.commitments[0];
  const auto& a2 = proof.commitments[1];
  const auto& c = proof.challenges[0];
  const auto& z = proof.responses[0];
  if (c != equal_dlog_challenge(gp, kind, st, a1, a2, context)) return false;
  return gp.pow(st.g1, z) == gp.mul(a1, gp.pow(st.h1, c)) &&
         gp.pow(st.g2, z) == gp.mul(a2, gp.pow(st.h2, c));
}

}  // namespace cakecut
