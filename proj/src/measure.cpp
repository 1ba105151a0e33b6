#include "cakecut/measure.hpp"

#include <algorithm>

namespace cakecut {

Interval make_interval(Rational lo, Rational hi) {
  if (sgn(lo) < 0 || lo > hi || hi > 1) {
    throw std::invalid_argument("invalid interval [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
  return Interval{std::move(lo), std::move(hi)};
}

std::string to_string(const Interval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

const char* to_string(DensityError::Kind kind) {
  switch (kind) {
    case DensityError::Kind::NonPositiveValue: return "axiom-1";
    case DensityError::Kind::NotNormalized: return "axiom-3";
    case DensityError::Kind::MalformedSegments: return "malformed-segments";
  }
  return "unknown";
}

std::optional<DensityError> validate_density(std::span<const Segment> segments) {
  using Kind = DensityError::Kind;
  if (segments.empty()) {
    return DensityError{Kind::MalformedSegments, "density has no segments"};
  }
  Rational left = 0;
  Rational total = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.right <= left) {
      return DensityError{Kind::MalformedSegments,
                          "segment " + std::to_string(i) + " right end " + to_string(s.right) +
                              " does not exceed " + to_string(left)};
    }
    if (sgn(s.value) <= 0) {
      return DensityError{Kind::NonPositiveValue,
                          "segment " + std::to_string(i) + " has non-positive value " +
                              to_string(s.value)};
    }
    total += s.value * (s.right - left);
    left = s.right;
  }
  if (left != 1) {
    return DensityError{Kind::MalformedSegments,
                        "last right end is " + to_string(left) + ", expected 1"};
  }
  if (total != 1) {
    return DensityError{Kind::NotNormalized, "total mass is " + to_string(total) + ", expected 1"};
  }
  return std::nullopt;
}

Density::Density(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (auto& s : segments_) {
    s.right.canonicalize();
    s.value.canonicalize();
  }
  if (auto err = validate_density(segments_)) throw DensityValidationError(*err);
  max_value_ = std::max_element(segments_.begin(), segments_.end(),
                                [](const Segment& a, const Segment& b) { return a.value < b.value; })
                   ->value;
}

Density Density::uniform() { return Density({Segment{1, 1}}); }

Rational measure(const Density& d, const Interval& iv) {
  Rational total = 0;
  Rational left = 0;
  for (const auto& s : d.segments()) {
    if (left >= iv.hi) break;
    const Rational& lo = std::max(left, iv.lo);
    const Rational& hi = std::min(s.right, iv.hi);
    if (hi > lo) total += s.value * (hi - lo);
    left = s.right;
  }
  return total;
}

Rational measure(const Density& d, std::span<const Interval> pieces) {
  Rational total = 0;
  for (const auto& iv : pieces) total += measure(d, iv);
  return total;
}

Rational cut_point(const Density& d, const Interval& iv, const Rational& target) {
  if (sgn(target) < 0 || target > measure(d, iv)) {
    throw std::out_of_range("cut target " + to_string(target) + " outside [0, measure of " +
                            to_string(iv) + "]");
  }
  if (sgn(target) == 0) return iv.hi;

  // Walk segments from the right end of the interval leftwards.
  const auto& segs = d.segments();
  Rational remaining = target;
  for (std::size_t i = segs.size(); i-- > 0;) {
    Rational seg_lo = i == 0 ? Rational(0) : segs[i - 1].right;
    const Rational& hi = std::min(segs[i].right, iv.hi);
    const Rational& lo = std::max(seg_lo, iv.lo);
    if (hi <= lo) continue;
    Rational mass = segs[i].value * (hi - lo);
    if (mass >= remaining) return hi - remaining / segs[i].value;
    remaining -= mass;
  }
  return iv.lo;  // unreachable when target <= measure(d, iv)
}

Grid::Grid(unsigned exponent) : m(exponent) {
  if (m < 1) throw std::invalid_argument("grid exponent must be at least 1");
}

BigInt Grid::levels() const {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, m);
  return out;
}

BigInt quantize(const Rational& x, const Grid& g) {
  if (sgn(x) < 0 || x > 1) throw std::out_of_range("quantize expects x in [0,1]");
  return floor(x * Rational(g.levels()));
}

Rational dequantize(const BigInt& j, const Grid& g) {
  BigInt top = g.levels();
  if (sgn(j) < 0 || j > top) throw std::out_of_range("grid level out of range");
  Rational out(j, top);
  out.canonicalize();
  return out;
}

}  // namespace cakecut
