#include "cakecut/drbg.hpp"

#include <openssl/sha.h>

#include <stdexcept>

namespace cakecut {

Digest sha256(std::string_view data) {
  Digest out;
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), out.data());
  return out;
}

std::string hex(const Digest& d) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(d.size() * 2);
  for (auto b : d) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Drbg::Drbg(std::string_view seed) : key_(sha256(std::string("cakecut/drbg/seed\x00", 18) + std::string(seed))) {}

Drbg Drbg::derive(std::string_view label) const {
  std::string material(reinterpret_cast<const char*>(key_.data()), key_.size());
  material += '\x01';
  material += label;
  return Drbg(material);
}

std::uint8_t Drbg::next_byte() {
  if (used_ == block_.size()) {
    std::string input(reinterpret_cast<const char*>(key_.data()), key_.size());
    for (int shift = 56; shift >= 0; shift -= 8) {
      input.push_back(static_cast<char>((counter_ >> shift) & 0xff));
    }
    ++counter_;
    block_ = sha256(input);
    used_ = 0;
  }
  return block_[used_++];
}

std::uint64_t Drbg::next_u64() {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | next_byte();
  return v;
}

BigInt Drbg::below(const BigInt& bound) {
  if (sgn(bound) <= 0) throw std::invalid_argument("Drbg::below needs a positive bound");
  // Draw 128 bits beyond the bound's size and reduce; the bias is below 2^-128.
  std::size_t bytes = (mpz_sizeinbase(bound.get_mpz_t(), 2) + 7) / 8 + 16;
  BigInt acc = 0;
  for (std::size_t i = 0; i < bytes; ++i) {
    acc <<= 8;
    acc += next_byte();
  }
  BigInt out;
  mpz_mod(out.get_mpz_t(), acc.get_mpz_t(), bound.get_mpz_t());
  return out;
}

BigInt Drbg::nonzero_below(const BigInt& bound) {
  if (bound <= 1) throw std::invalid_argument("Drbg::nonzero_below needs bound > 1");
  return below(bound - 1) + 1;
}

}  // namespace cakecut
