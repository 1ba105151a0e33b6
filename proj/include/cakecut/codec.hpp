#pragma once

// Canonical JSON encoding of group elements, proofs and protocol payloads.
// Elements and scalars are fixed-width lowercase big-endian hex, so every
// value has exactly one encoding.

#include "cakecut/auction.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cakecut {

using Json = nlohmann::json;

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string encode_element(const GroupParams& gp, const Element& e);
std::string encode_scalar(const GroupParams& gp, const Scalar& s);
/// Decoders throw CodecError on wrong width, non-canonical digits or range.
Element decode_element(const GroupParams& gp, const Json& j);
Scalar decode_scalar(const GroupParams& gp, const Json& j);

Json encode(const GroupParams& gp, const Ciphertext& c);
Json encode(const GroupParams& gp, const SigmaProof& p);
Json encode(const GroupParams& gp, const PublicKeyShare& k);
Json encode(const GroupParams& gp, const BidVector& bv);
Json encode(const GroupParams& gp, const BlindedCiphertext& b);
Json encode(const GroupParams& gp, const DecryptionShare& s);

Ciphertext decode_ciphertext(const GroupParams& gp, const Json& j);
SigmaProof decode_proof(const GroupParams& gp, const Json& j);
PublicKeyShare decode_key_share(const GroupParams& gp, const Json& j, std::size_t player);
BidVector decode_bid_vector(const GroupParams& gp, const Json& j, std::size_t owner);
BlindedCiphertext decode_blind(const GroupParams& gp, const Json& j, std::size_t player);
DecryptionShare decode_share(const GroupParams& gp, const Json& j, std::size_t player);

/// Compact dump with sorted keys; the input to every chain hash.
std::string canonical(const Json& j);

}  // namespace cakecut
