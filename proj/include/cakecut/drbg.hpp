#pragma once

#include "cakecut/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace cakecut {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::string_view data);
std::string hex(const Digest& d);

/// Deterministic random bit generator: SHA-256 in counter mode over a seed.
/// Child generators are derived by label so that independent consumers
/// (players, rounds, cells) draw from streams that do not depend on call order.
class Drbg {
 public:
  explicit Drbg(std::string_view seed);

  Drbg derive(std::string_view label) const;

  std::uint64_t next_u64();
  /// Uniform in [0, bound). Bound must be positive.
  BigInt below(const BigInt& bound);
  /// Uniform in [1, bound).
  BigInt nonzero_below(const BigInt& bound);

 private:
  Digest key_;
  std::uint64_t counter_ = 0;
  Digest block_{};
  std::size_t used_ = block_.size();

  std::uint8_t next_byte();
};

}  // namespace cakecut
