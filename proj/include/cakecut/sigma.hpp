#pragma once

// Non-interactive sigma proofs over a Schnorr group, made non-interactive with
// Fiat-Shamir. Every challenge hashes a domain tag, the group parameters, a
// caller-supplied context string (who/when), the statement and the commitments.

#include "cakecut/drbg.hpp"
#include "cakecut/group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cakecut {

enum class ProofKind {
  DlogKnowledge,        // knows x with h = g^x
  ChaumPedersen,        // log_{g1} h1 == log_{g2} h2
  BitOr,                // ciphertext encrypts 0 or 1
  DecryptionShare,      // share = A^x for the x behind a published key share
  Exponentiation,       // blinded ciphertext = original^r for a common r
};

const char* to_string(ProofKind kind);
ProofKind proof_kind_from_string(std::string_view tag);

struct SigmaProof {
  ProofKind kind = ProofKind::DlogKnowledge;
  std::vector<Element> commitments;
  std::vector<Scalar> challenges;
  std::vector<Scalar> responses;

  bool operator==(const SigmaProof&) const = default;
};

/// Incremental Fiat-Shamir hash input with unambiguous, fixed-width framing.
class ChallengeHasher {
 public:
  ChallengeHasher(const GroupParams& gp, ProofKind kind, std::string_view context);

  ChallengeHasher& element(const Element& e);
  ChallengeHasher& elements(const std::vector<Element>& es);

  Digest digest() const;
  Scalar challenge() const;

 private:
  const GroupParams& gp_;
  std::string buffer_;
};

struct EqualDlogStatement {
  Element g1, h1, g2, h2;
};

SigmaProof prove_dlog(const GroupParams& gp, const Element& h, const Scalar& x, Drbg& rng,
                      std::string_view context);
bool verify_dlog(const GroupParams& gp, const Element& h, const SigmaProof& proof,
                 std::string_view context);

/// Chaum-Pedersen equality of discrete logs. `kind` selects the domain tag
/// (ChaumPedersen, DecryptionShare or Exponentiation).
SigmaProof prove_equal_dlog(const GroupParams& gp, ProofKind kind, const EqualDlogStatement& st,
                            const Scalar& witness, Drbg& rng, std::string_view context);
bool verify_equal_dlog(const GroupParams& gp, ProofKind kind, const EqualDlogStatement& st,
                       const SigmaProof& proof, std::string_view context);

/// Field-count and range checks shared by all verifiers.
bool well_formed(const GroupParams& gp, const SigmaProof& proof, std::size_t commitments,
                 std::size_t challenges, std::size_t responses);

}  // namespace cakecut
