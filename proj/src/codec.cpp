#include "cakecut/codec.hpp"

namespace cakecut {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw CodecError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw CodecError(std::string("field \"") + name + "\" is not an array");
  return a;
}

BigInt decode_hex(const Json& j, std::size_t width) {
  if (!j.is_string()) throw CodecError("expected a hex string");
  try {
    return from_hex(j.get<std::string>(), width);
  } catch (const std::invalid_argument& e) {
    throw CodecError(e.what());
  }
}

}  // namespace

std::string encode_element(const GroupParams& gp, const Element& e) {
  return to_hex(e, gp.element_hex_width());
}

std::string encode_scalar(const GroupParams& gp, const Scalar& s) {
  return to_hex(s, gp.scalar_hex_width());
}

Element decode_element(const GroupParams& gp, const Json& j) {
  Element e = decode_hex(j, gp.element_hex_width());
  if (!gp.is_element(e)) throw CodecError("value is not a group element");
  return e;
}

Scalar decode_scalar(const GroupParams& gp, const Json& j) {
  Scalar s = decode_hex(j, gp.scalar_hex_width());
  if (s >= gp.q) throw CodecError("scalar out of range");
  return s;
}

Json encode(const GroupParams& gp, const Ciphertext& c) {
  return Json::array({encode_element(gp, c.a), encode_element(gp, c.b)});
}

Json encode(const GroupParams& gp, const SigmaProof& p) {
  Json out;
  out["kind"] = to_string(p.kind);
  Json cm = Json::array(), ch = Json::array(), rs = Json::array();
  for (const auto& a : p.commitments) cm.push_back(encode_element(gp, a));
  for (const auto& c : p.challenges) ch.push_back(encode_scalar(gp, c));
  for (const auto& z : p.responses) rs.push_back(encode_scalar(gp, z));
  out["commitments"] = std::move(cm);
  out["challenges"] = std::move(ch);
  out["responses"] = std::move(rs);
  return out;
}

Json encode(const GroupParams& gp, const PublicKeyShare& k) {
  return Json{{"h", encode_element(gp, k.h)}, {"proof", encode(gp, k.proof)}};
}

Json encode(const GroupParams& gp, const BidVector& bv) {
  Json cells = Json::array(), proofs = Json::array();
  for (const auto& c : bv.cells) cells.push_back(encode(gp, c));
  for (const auto& p : bv.bit_proofs) proofs.push_back(encode(gp, p));
  return Json{{"cells", std::move(cells)},
              {"bit_proofs", std::move(proofs)},
              {"sum_proof", encode(gp, bv.sum_proof)}};
}

Json encode(const GroupParams& gp, const BlindedCiphertext& b) {
  return Json{{"value", encode(gp, b.value)}, {"proof", encode(gp, b.proof)}};
}

Json encode(const GroupParams& gp, const DecryptionShare& s) {
  return Json{{"value", encode_element(gp, s.value)}, {"proof", encode(gp, s.proof)}};
}

Ciphertext decode_ciphertext(const GroupParams& gp, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw CodecError("ciphertext must be a pair");
  return Ciphertext{decode_element(gp, j[0]), decode_element(gp, j[1])};
}

SigmaProof decode_proof(const GroupParams& gp, const Json& j) {
  SigmaProof p;
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw CodecError("proof kind must be a string");
  try {
    p.kind = proof_kind_from_string(kind.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CodecError(e.what());
  }
  for (const auto& a : array_field(j, "commitments")) p.commitments.push_back(decode_element(gp, a));
  for (const auto& c : array_field(j, "challenges")) p.challenges.push_back(decode_scalar(gp, c));
  for (const auto& z : array_field(j, "responses")) p.responses.push_back(decode_scalar(gp, z));
  return p;
}

PublicKeyShare decode_key_share(const GroupParams& gp, const Json& j, std::size_t player) {
  return PublicKeyShare{player, decode_element(gp, field(j, "h")), decode_proof(gp, field(j, "proof"))};
}

BidVector decode_bid_vector(const GroupParams& gp, const Json& j, std::size_t owner) {
  BidVector bv;
  bv.owner = owner;
  for (const auto& c : array_field(j, "cells")) bv.cells.push_back(decode_ciphertext(gp, c));
  for (const auto& p : array_field(j, "bit_proofs")) bv.bit_proofs.push_back(decode_proof(gp, p));
  bv.sum_proof = decode_proof(gp, field(j, "sum_proof"));
  return bv;
}

BlindedCiphertext decode_blind(const GroupParams& gp, const Json& j, std::size_t player) {
  return BlindedCiphertext{player, decode_ciphertext(gp, field(j, "value")),
                           decode_proof(gp, field(j, "proof"))};
}

DecryptionShare decode_share(const GroupParams& gp, const Json& j, std::size_t player) {
  return DecryptionShare{player, decode_element(gp, field(j, "value")),
                         decode_proof(gp, field(j, "proof"))};
}

std::string canonical(const Json& j) { return j.dump(); }

}  // namespace cakecut
