#include "cakecut/measure.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace cakecut;

namespace {
Rational q(const char* s) { return parse_rational(s); }
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(q("10/12")) == "5/6");
  CHECK(to_string(q("-4/2")) == "-2");
  CHECK(to_decimal(q("1/3"), 4) == "0.3333");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(floor(q("-1/2")) == -1);
}

TEST_CASE("density validation names the violated axiom") {
  auto kind = [](std::vector<Segment> s) { return validate_density(s)->kind; };
  CHECK(kind({{q("1/2"), q("0")}, {q("1"), q("2")}}) == DensityError::Kind::NonPositiveValue);
  CHECK(kind({{q("1"), q("2")}}) == DensityError::Kind::NotNormalized);
  CHECK(kind({{q("1/2"), q("1")}}) == DensityError::Kind::MalformedSegments);
  CHECK(kind({{q("1/2"), q("1")}, {q("1/2"), q("1")}, {q("1"), q("1")}}) == DensityError::Kind::MalformedSegments);
  CHECK(kind({}) == DensityError::Kind::MalformedSegments);
  CHECK_FALSE(validate_density(Density::uniform().segments()));
  CHECK_THROWS_AS(Density({{q("1"), q("3")}}), DensityValidationError);
}

TEST_CASE("measure and cut point on the example density") {
  Density d({{q("5/6"), q("4/5")}, {q("1"), q("2")}});
  CHECK(measure(d, Interval{q("0"), q("1")}) == 1);
  CHECK(measure(d, Interval{q("5/6"), q("1")}) == q("1/3"));
  CHECK(measure(d, Interval{q("0"), q("5/6")}) == q("2/3"));
  CHECK(cut_point(d, Interval{q("0"), q("1")}, q("1/3")) == q("5/6"));
  CHECK(cut_point(d, Interval{q("0"), q("5/6")}, q("1/3")) == q("5/12"));
  CHECK_THROWS_AS(cut_point(d, Interval{q("0"), q("1/2")}, q("1")), std::out_of_range);
  CHECK(d.max_value() == 2);
}

TEST_CASE("measure and cut point agree with the oracle on random densities") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Density d = oracle::random_density(rng);
    auto ps = oracle::pieces_of(d);
    Rational lo(static_cast<long>(rng() % 50), 100), hi(static_cast<long>(50 + rng() % 51), 100);
    lo.canonicalize();
    hi.canonicalize();
    CHECK(measure(d, Interval{lo, hi}) == oracle::measure(ps, lo, hi));
    for (std::size_t k = 2; k <= 5; ++k) {
      CHECK(cut_point(d, Interval{0, hi}, measure(d, Interval{0, hi}) / Rational(k)) == oracle::cut(ps, hi, k));
    }
  }
}

TEST_CASE("global grid quantization") {
  Grid g(10);
  CHECK(g.levels() == 1024);
  CHECK(quantize(q("5/6"), g) == 853);
  CHECK(quantize(q("1"), g) == 1024);
  CHECK(dequantize(853, g) == q("853/1024"));
  CHECK_THROWS_AS(dequantize(1025, g), std::out_of_range);
  CHECK_THROWS_AS(make_interval(q("1/2"), q("1/3")), std::invalid_argument);
}
