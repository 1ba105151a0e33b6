#include "cakecut/refproto.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cakecut {

Profile::Profile(std::vector<Density> ds) : densities(std::move(ds)) {
  if (densities.size() < 2) throw std::invalid_argument("a profile needs at least two players");
}

bool tiles_unit_interval(const Allocation& a) {
  std::vector<Interval> all;
  for (const auto& ps : a.pieces) all.insert(all.end(), ps.begin(), ps.end());
  std::sort(all.begin(), all.end(), [](const Interval& l, const Interval& r) {
    return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi);
  });
  Rational cursor = 0;
  for (const auto& iv : all) {
    if (iv.lo != cursor || iv.hi < iv.lo) return false;
    cursor = iv.hi;
  }
  return cursor == 1;
}

std::vector<Rational> utilities(const Profile& p, const Allocation& a) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(measure(p.densities[i], a.pieces.at(i)));
  return out;
}

Rational honest_cut(const Density& d, const Rational& right_end, std::size_t remaining) {
  Interval rest{0, right_end};
  return cut_point(d, rest, measure(d, rest) / Rational(remaining));
}

namespace {

using Strategy = std::function<Rational(PlayerIndex, const Rational& honest,
                                        const std::vector<RoundTrace>& history)>;

EndrissResult endriss_with(const Profile& p, const Strategy& declare) {
  const std::size_t n = p.size();
  EndrissResult out{Allocation(n), {}};
  std::vector<bool> active(n, true);
  Rational x = 1;
  for (std::size_t k = n; k >= 2; --k) {
    RoundTrace trace{n - k + 1, k, x, std::vector<std::optional<Rational>>(n), 0, 0};
    std::optional<PlayerIndex> best;
    for (PlayerIndex i = 0; i < n; ++i) {
      if (!active[i]) continue;
      Rational honest = honest_cut(p.densities[i], x, k);
      trace.declared[i] = declare ? declare(i, honest, out.rounds) : honest;
      if (!best || *trace.declared[i] > *trace.declared[*best]) best = i;
    }
    trace.winner = *best;
    trace.point = *trace.declared[*best];
    out.allocation.pieces[*best].push_back(Interval{trace.point, x});
    active[*best] = false;
    x = trace.point;
    out.rounds.push_back(std::move(trace));
  }
  for (PlayerIndex i = 0; i < n; ++i) {
    if (active[i]) out.allocation.pieces[i].push_back(Interval{0, x});
  }
  return out;
}

}  // namespace

EndrissResult run_endriss(const Profile& p) { return endriss_with(p, nullptr); }

SgallWoegingerResult run_sgall_woeginger(const Profile& p) {
  const std::size_t n = p.size();
  SgallWoegingerResult out{Allocation(n), std::vector<std::vector<Rational>>(n)};
  const Rational share(1, n);
  for (PlayerIndex i = 0; i < n; ++i) {
    const auto& d = p.densities[i];
    for (std::size_t j = 1; j < n; ++j) {
      // mu([0, x_{i,j}]) = j/n, i.e. mu([x_{i,j}, 1]) = (n - j)/n.
      out.declarations[i].push_back(cut_point(d, Interval{0, 1}, share * Rational(n - j)));
    }
  }

  std::vector<bool> active(n, true);
  Rational y = 0;
  for (std::size_t k = 1; k < n; ++k) {
    std::optional<PlayerIndex> best;
    for (PlayerIndex i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (!best || out.declarations[i][k - 1] < out.declarations[*best][k - 1]) best = i;
    }
    const Rational& z = out.declarations[*best][k - 1];
    out.allocation.pieces[*best].push_back(Interval{y, z});
    active[*best] = false;
    y = z;
  }
  for (PlayerIndex i = 0; i < n; ++i) {
    if (active[i]) out.allocation.pieces[i].push_back(Interval{y, 1});
  }
  return out;
}

LeakAttackResult endriss_leak_attack(const Profile& p, PlayerIndex attacker) {
  if (p.size() < 3) throw std::invalid_argument("the leak attack needs at least three players");
  if (attacker >= p.size()) throw std::out_of_range("attacker index out of range");

  Strategy strategy = [attacker](PlayerIndex i, const Rational& honest,
                                 const std::vector<RoundTrace>& history) -> Rational {
    if (i != attacker || history.empty()) return honest;
    const auto& prev = history.back();
    std::optional<Rational> bound;
    for (PlayerIndex j = 0; j < prev.declared.size(); ++j) {
      if (j == attacker || j == prev.winner || !prev.declared[j]) continue;
      if (!bound || *prev.declared[j] > *bound) bound = prev.declared[j];
    }
    if (bound && *bound < honest) return *bound;
    return honest;
  };

  EndrissResult honest_run = run_endriss(p);
  EndrissResult attacked = endriss_with(p, strategy);
  const auto& d = p.densities[attacker];
  LeakAttackResult out{attacked.allocation, attacked,
                       measure(d, honest_run.allocation.pieces[attacker]),
                       measure(d, attacked.allocation.pieces[attacker])};
  return out;
}

}  // namespace cakecut
