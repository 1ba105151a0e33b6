#pragma once

// Plaintext reference protocols: Endriss (discrete moving knife with public
// declarations), Sgall-Woeginger, and the declaration-leak manipulation.

#include "cakecut/measure.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cakecut {

using PlayerIndex = std::size_t;  // zero-based internally, rendered as P1..Pn

struct Profile {
  std::vector<Density> densities;

  /// Throws std::invalid_argument for fewer than two players.
  explicit Profile(std::vector<Density> ds);
  std::size_t size() const noexcept { return densities.size(); }
};

struct Allocation {
  std::vector<std::vector<Interval>> pieces;  // per player
  std::vector<bool> withheld;                 // per player; set for detected misbehavers

  explicit Allocation(std::size_t n = 0) : pieces(n), withheld(n, false) {}
  std::size_t size() const noexcept { return pieces.size(); }
  bool operator==(const Allocation&) const = default;
};

/// True iff the pieces are pairwise disjoint (shared endpoints allowed) and
/// their union is exactly [0,1].
bool tiles_unit_interval(const Allocation& a);

/// Exact utility of each player for their own pieces.
std::vector<Rational> utilities(const Profile& p, const Allocation& a);

struct RoundTrace {
  std::size_t round;                              // 1-based
  std::size_t remaining;                          // k
  Rational right_end;                             // x
  std::vector<std::optional<Rational>> declared;  // nullopt for players who already exited
  PlayerIndex winner;
  Rational point;                                 // x'
};

/// Cut point of player `d` in a round: mu([y, x]) == mu([0, x]) / k.
Rational honest_cut(const Density& d, const Rational& right_end, std::size_t remaining);

struct EndrissResult {
  Allocation allocation;
  std::vector<RoundTrace> rounds;
};

/// Discrete moving knife with maximum selection. Ties go to the lowest index.
/// This is also the discrete Dubins-Spanier assignment used as the engine oracle.
EndrissResult run_endriss(const Profile& p);

struct SgallWoegingerResult {
  Allocation allocation;
  std::vector<std::vector<Rational>> declarations;  // n x (n-1)
};

SgallWoegingerResult run_sgall_woeginger(const Profile& p);

struct LeakAttackResult {
  Allocation allocation;
  EndrissResult trace;
  Rational honest_utility;
  Rational attack_utility;
};

/// Replays Endriss with one manipulating player. From round two on the
/// attacker declares the highest previous-round declaration among the other
/// remaining players whenever that lies below its honest point: those players'
/// new declarations are strictly lower, so the attacker still wins with a
/// larger piece. Requires n >= 3.
LeakAttackResult endriss_leak_attack(const Profile& p, PlayerIndex attacker);

}  // namespace cakecut
