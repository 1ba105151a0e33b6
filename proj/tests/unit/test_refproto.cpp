#include "cakecut/analytics.hpp"
#include "cakecut/selftest.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace cakecut;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}

TEST_CASE("endriss golden trace") {
  auto r = run_endriss(example_profile());
  REQUIRE(r.rounds.size() == 2);
  CHECK(r.rounds[0].winner == 0);
  CHECK(r.rounds[0].point == q("5/6"));
  CHECK(*r.rounds[0].declared[1] == q("2/3"));
  CHECK(*r.rounds[0].declared[2] == q("1/3"));
  CHECK_FALSE(r.rounds[1].declared[0].has_value());
  CHECK(*r.rounds[1].declared[1] == q("5/12"));
  CHECK(*r.rounds[1].declared[2] == q("11/48"));
  CHECK(r.rounds[1].winner == 1);
  CHECK(r.allocation.pieces[2] == std::vector<Interval>{Interval{q("0"), q("5/12")}});
  CHECK(tiles_unit_interval(r.allocation));
}

TEST_CASE("sgall-woeginger on the example") {
  auto r = run_sgall_woeginger(example_profile());
  CHECK(r.allocation.pieces[0] == std::vector<Interval>{Interval{q("2/3"), q("1")}});
  CHECK(r.allocation.pieces[1] == std::vector<Interval>{Interval{q("1/6"), q("2/3")}});
  CHECK(r.allocation.pieces[2] == std::vector<Interval>{Interval{q("0"), q("1/6")}});
  CHECK(social_surplus(example_profile(), r.allocation) == q("13/10"));
}

TEST_CASE("leak attack") {
  auto a = endriss_leak_attack(example_profile(), 1);
  CHECK(a.honest_utility == q("5/12"));
  CHECK(a.attack_utility == q("1/2"));
  CHECK(a.trace.rounds[1].winner == 1);
  CHECK(tiles_unit_interval(a.allocation));
  CHECK_THROWS(endriss_leak_attack(Profile({Density::uniform(), Density::uniform()}), 0));
}

TEST_CASE("ties go to the lowest index") {
  auto r = run_endriss(Profile({Density::uniform(), Density::uniform(), Density::uniform()}));
  CHECK(r.rounds[0].winner == 0);
  CHECK(r.rounds[1].winner == 1);
  CHECK(r.allocation.pieces[2] == std::vector<Interval>{Interval{q("0"), q("1/3")}});
}

TEST_CASE("reference protocols match the oracles on random profiles") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    auto p = oracle::random_profile(rng, 2 + t % 5);
    auto ps = oracle::pieces_of(p);
    auto e = run_endriss(p);
    auto o = oracle::endriss(ps);
    for (std::size_t i = 0; i < p.size(); ++i) {
      REQUIRE(e.allocation.pieces[i].size() == 1);
      CHECK(e.allocation.pieces[i][0] == Interval{o.pieces[i].first, o.pieces[i].second});
    }
    auto sw = run_sgall_woeginger(p);
    auto osw = oracle::sgall_woeginger(ps);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(sw.allocation.pieces[i][0] == Interval{osw[i].first, osw[i].second});
    }
    // Both are simple fair.
    for (const auto& u : utilities(p, e.allocation)) CHECK(u >= Rational(1, p.size()));
    for (const auto& u : utilities(p, sw.allocation)) CHECK(u >= Rational(1, p.size()));
  }
}

TEST_CASE("analytics") {
  auto p = example_profile();
  auto e = run_endriss(p);
  CHECK(social_surplus(p, e.allocation) == q("35/24"));
  CHECK(cut_count(e.allocation) == 2);
  auto withheld = e.allocation;
  withheld.withheld[0] = true;
  CHECK(received_utilities(p, withheld)[0] == 0);
  CHECK(social_surplus(p, withheld) == q("35/24") - q("1/3"));

  auto a = summarize(p, "endriss", e.allocation);
  auto b = summarize(p, "sgall-woeginger", run_sgall_woeginger(p).allocation);
  CHECK(a.min_margin() == 0);
  CHECK(a.margins[1] == q("1/12"));
  CHECK(a.simple_fair());
  auto c = compare_surplus({b, a});
  CHECK(c.ordering == std::vector<std::string>{"endriss", "sgall-woeginger"});
  CHECK(c.differences[0].value == q("-19/120"));

  auto other = summarize(Profile({Density::uniform(), Density::uniform()}), "x", Allocation(2));
  CHECK_THROWS_AS(compare_surplus({a, other}), std::invalid_argument);
}
