#pragma once

#include "latmink/arith.hpp"

#include <compare>
#include <optional>
#include <string>

namespace latmink {

/// An exact nonnegative real sqrt(r) for rational r >= 0. Rational values q
/// are stored with radicand q*q, so all comparisons reduce to radicands.
class SqrtRational {
 public:
  SqrtRational() = default;
  static SqrtRational from_rational(const Rational& q);
  static SqrtRational sqrt_of(const Rational& radicand);

  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return radicand_.is_zero(); }
  /// The value itself when it is rational.
  std::optional<Rational> rational_value() const;

  /// c / value, exact; throws std::domain_error on zero.
  SqrtRational reciprocal_times(const Rational& c) const;
  SqrtRational scaled(const Rational& t) const;  // t >= 0

  Integer floor() const { return floor_sqrt(radicand_); }
  Integer ceil() const { return ceil_sqrt(radicand_); }

  friend bool operator==(const SqrtRational&, const SqrtRational&) = default;
  friend std::strong_ordering operator<=>(const SqrtRational& a, const SqrtRational& b) {
    return a.radicand_ <=> b.radicand_;
  }
  /// Comparisons against a rational square the (nonnegative) sides.
  friend std::strong_ordering operator<=>(const SqrtRational& a, const Rational& q);
  friend bool operator==(const SqrtRational& a, const Rational& q) { return (a <=> q) == 0; }

  /// "p/q" when rational, otherwise "sqrt(p/q)".
  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument.
  static SqrtRational parse(std::string_view text);

 private:
  explicit SqrtRational(Rational radicand) : radicand_(std::move(radicand)) {}
  Rational radicand_;
};

/// The Minkowski functional value of a point: min { l > 0 : x in l K }.
using GaugeValue = SqrtRational;

}  // namespace latmink
