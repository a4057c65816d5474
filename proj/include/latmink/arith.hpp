#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and always-reduced
// rationals. Nothing in this library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace latmink {

using Integer = boost::multiprecision::cpp_int;

/// A rational number p/q kept in lowest terms with q > 0.
class Rational {
 public:
  Rational() : den_(1) {}
  template <std::integral T>
  Rational(T v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return num_.sign() < 0 ? -*this : *this; }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the value is an integer.
  std::string str() const;
  /// Accepts "p", "p/q", with an optional sign; throws std::invalid_argument.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
/// floor(sqrt(x)) and ceil(sqrt(x)) for rational x >= 0.
Integer floor_sqrt(const Rational& x);
Integer ceil_sqrt(const Rational& x);
/// Some rational q >= 0 with q*q == x, if one exists.
bool is_rational_square(const Rational& x, Rational* root = nullptr);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer pow_int(const Integer& base, unsigned exponent);
Integer factorial(unsigned n);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace latmink

template <>
struct std::hash<latmink::Integer> {
  std::size_t operator()(const latmink::Integer& v) const noexcept;
};
