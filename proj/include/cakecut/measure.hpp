#pragma once

// Exact-rational cake model: piecewise-constant utility densities over [0,1],
// interval measures, cut-point inversion and grid quantization.

#include "cakecut/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cakecut {

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Throws std::invalid_argument unless 0 <= lo <= hi <= 1.
Interval make_interval(Rational lo, Rational hi);

std::string to_string(const Interval& iv);

/// One constant piece of a density: value on (previous right end, right].
struct Segment {
  Rational right;
  Rational value;

  bool operator==(const Segment&) const = default;
};

struct DensityError {
  enum class Kind {
    NonPositiveValue,  // violates strict positivity of every nonempty piece
    NotNormalized,     // total integral over [0,1] differs from 1
    MalformedSegments, // empty, non-increasing or not ending at 1
  };
  Kind kind;
  std::string message;
};

const char* to_string(DensityError::Kind kind);

std::optional<DensityError> validate_density(std::span<const Segment> segments);

class DensityValidationError : public std::invalid_argument {
 public:
  explicit DensityValidationError(DensityError error)
      : std::invalid_argument(error.message), error_(std::move(error)) {}
  const DensityError& error() const noexcept { return error_; }

 private:
  DensityError error_;
};

/// A validated utility density. Construction enforces positivity, strictly
/// increasing right endpoints ending at 1, and unit total mass.
class Density {
 public:
  explicit Density(std::vector<Segment> segments);

  static Density uniform();

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const Rational& max_value() const noexcept { return max_value_; }

  bool operator==(const Density& other) const { return segments_ == other.segments_; }

 private:
  std::vector<Segment> segments_;
  Rational max_value_;
};

/// Integral of the density over an interval.
Rational measure(const Density& d, const Interval& iv);

/// Sum of measures of a list of pieces (assumed pairwise disjoint).
Rational measure(const Density& d, std::span<const Interval> pieces);

/// Returns the unique y in [iv.lo, iv.hi] with measure(d, [y, iv.hi]) == target.
/// Throws std::out_of_range if target is outside [0, measure(d, iv)].
Rational cut_point(const Density& d, const Interval& iv, const Rational& target);

/// Global quantization grid with 2^m cells over [0,1].
struct Grid {
  unsigned m;

  explicit Grid(unsigned exponent);
  BigInt levels() const;  // 2^m
};

/// floor(x * 2^m), for x in [0,1].
BigInt quantize(const Rational& x, const Grid& g);

/// j / 2^m; throws std::out_of_range unless 0 <= j <= 2^m.
Rational dequantize(const BigInt& j, const Grid& g);

}  // namespace cakecut
