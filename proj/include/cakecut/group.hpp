#pragma once

// Schnorr-group arithmetic: the order-q subgroup of Z_p^* for a safe prime p = 2q + 1.

#include "cakecut/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace cakecut {

using Element = mpz_class;  // member of the order-q subgroup
using Scalar = mpz_class;   // exponent in [0, q)

struct GroupParams {
  std::string name;
  BigInt p;
  BigInt q;
  Element g;

  /// p = 23, q = 11, g = 2. Deterministic vectors only; offers no security.
  static GroupParams test_group();
  /// 2048-bit MODP safe prime (RFC 3526 group 14) with g = 4 generating the order-q subgroup.
  static GroupParams modp2048();
  /// Looks up "test" or "modp2048"; throws std::invalid_argument otherwise.
  static GroupParams named(std::string_view name);

  /// Throws std::invalid_argument unless p = 2q + 1, both prime, g of order q.
  void validate() const;

  std::size_t element_hex_width() const;
  std::size_t scalar_hex_width() const;

  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& base, const Scalar& exponent) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element gpow(const Scalar& exponent) const { return pow(g, exponent); }
  Scalar reduce(const BigInt& v) const;

  /// Subgroup membership (quadratic residues mod a safe prime).
  bool is_element(const BigInt& x) const;

  bool operator==(const GroupParams& o) const { return p == o.p && q == o.q && g == o.g; }
};

/// Fixed-width lowercase big-endian hex. Throws if the value does not fit.
std::string to_hex(const BigInt& v, std::size_t width);
/// Strict inverse of to_hex: exact width, lowercase digits only.
BigInt from_hex(std::string_view text, std::size_t width);

}  // namespace cakecut
