#pragma once

// (n,n)-threshold exponential ElGamal: joint key generation, homomorphic
// addition and negation, verifiable decryption shares, verifiable blinding,
// and the ciphertext proofs used for unary bid vectors.

#include "cakecut/sigma.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cakecut {

struct Ciphertext {
  Element a;  // g^r
  Element b;  // g^m * PK^r

  bool operator==(const Ciphertext&) const = default;
};

/// Public half of a key share as posted during key generation.
struct PublicKeyShare {
  std::size_t player;
  Element h;  // g^x
  SigmaProof proof;
};

/// A player's key material. The secret never leaves the owning agent.
struct KeyShare {
  std::size_t player;
  Scalar secret;
  PublicKeyShare pub;
};

/// Names the player whose contribution failed public verification.
class ProofFailure : public std::runtime_error {
 public:
  ProofFailure(std::size_t player, std::string what)
      : std::runtime_error(std::move(what)), player_(player) {}
  std::size_t player() const noexcept { return player_; }

 private:
  std::size_t player_;
};

std::string keygen_context(std::size_t player);
/// Per-player proof context derived from a shared base context.
std::string player_context(std::string_view base, std::size_t player);

/// Fresh key share with secret drawn from [1, q).
KeyShare keygen_share(const GroupParams& gp, std::size_t player, Drbg& rng);
/// Key share for a given secret; throws std::invalid_argument unless secret is in [1, q).
KeyShare keygen_share(const GroupParams& gp, std::size_t player, const Scalar& secret, Drbg& rng);

bool verify_key_share(const GroupParams& gp, const PublicKeyShare& share);

/// Product of all public shares. Throws ProofFailure naming the first share
/// whose proof of knowledge does not verify.
Element combine_pk(const GroupParams& gp, std::span<const PublicKeyShare> shares);

/// Exponential ElGamal: (g^r, g^m PK^r). `plaintext` is reduced mod q.
Ciphertext encrypt(const GroupParams& gp, const Element& pk, const Scalar& plaintext,
                   const Scalar& r);

Ciphertext hom_add(const GroupParams& gp, const Ciphertext& c1, const Ciphertext& c2);
Ciphertext hom_neg(const GroupParams& gp, const Ciphertext& c);

bool is_ciphertext(const GroupParams& gp, const Ciphertext& c);

SigmaProof prove_bit(const GroupParams& gp, const Element& pk, const Ciphertext& c, int bit,
                     const Scalar& r, Drbg& rng, std::string_view context);
bool verify_bit(const GroupParams& gp, const Element& pk, const Ciphertext& c,
                const SigmaProof& proof, std::string_view context);

/// Homomorphic sum of a vector of ciphertexts.
Ciphertext sum(const GroupParams& gp, std::span<const Ciphertext> cs);

/// Proves that the homomorphic sum of `cells` encrypts exactly 1, given the
/// per-cell encryption randomness.
SigmaProof prove_sum_one(const GroupParams& gp, const Element& pk, std::span<const Ciphertext> cells,
                         std::span<const Scalar> randomness, Drbg& rng, std::string_view context);
bool verify_sum_one(const GroupParams& gp, const Element& pk, std::span<const Ciphertext> cells,
                    const SigmaProof& proof, std::string_view context);

struct DecryptionShare {
  std::size_t player;
  Element value;  // A^x
  SigmaProof proof;

  bool operator==(const DecryptionShare&) const = default;
};

DecryptionShare decrypt_share(const GroupParams& gp, const Ciphertext& c, const KeyShare& ks,
                              Drbg& rng, std::string_view context);
bool verify_decryption_share(const GroupParams& gp, const Element& player_h, const Ciphertext& c,
                             const DecryptionShare& share, std::string_view context);

/// B / prod(shares) = g^m. Requires exactly one verified share per key share,
/// in player order. Throws ProofFailure naming a missing or invalid player.
Element combine_decrypt(const GroupParams& gp, const Ciphertext& c,
                        std::span<const PublicKeyShare> keys,
                        std::span<const DecryptionShare> shares, std::string_view context);

struct BlindedCiphertext {
  std::size_t player;
  Ciphertext value;  // (A^r, B^r)
  SigmaProof proof;

  bool operator==(const BlindedCiphertext&) const = default;
};

/// Raises both components to a nonzero exponent. Throws std::invalid_argument if r == 0 mod q.
BlindedCiphertext blind_exponentiate(const GroupParams& gp, std::size_t player,
                                     const Ciphertext& c, const Scalar& r, Drbg& rng,
                                     std::string_view context);
/// Checks the common-exponent proof and that the exponent was nonzero
/// (identity components stay identity and nothing else becomes identity).
bool verify_blind(const GroupParams& gp, const Ciphertext& input, const BlindedCiphertext& out,
                  std::string_view context);

}  // namespace cakecut
