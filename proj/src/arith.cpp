#include "latmink/arith.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace latmink {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ == 1) return;
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Integer Rational::floor() const { return floor_div(num_, den_); }
Integer Rational::ceil() const { return ceil_div(num_, den_); }

Rational Rational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  if (o.den_ != 1) den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) {
    if (a.num_ < b.num_) return std::strong_ordering::less;
    if (a.num_ > b.num_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  Integer lhs = a.num_ * b.den_;
  Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("empty integer literal: '" + std::string(text) + "'");
  Integer v = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad integer literal: '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? Integer(-v) : v;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw std::domain_error("isqrt of negative integer");
  Integer s = boost::multiprecision::sqrt(n);
  // Guard against any off-by-one in the library routine.
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

Integer floor_sqrt(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative rational");
  // floor(sqrt(x)) == floor(sqrt(floor(x))) for x >= 0.
  return isqrt(x.floor());
}

Integer ceil_sqrt(const Rational& x) {
  Integer s = floor_sqrt(x);
  if (x.is_integer() && s * s == x.num()) return s;
  return s + 1;
}

bool is_rational_square(const Rational& x, Rational* root) {
  if (x.sign() < 0) return false;
  Integer p = isqrt(x.num());
  if (p * p != x.num()) return false;
  Integer q = isqrt(x.den());
  if (q * q != x.den()) return false;
  if (root) *root = Rational(p, q);
  return true;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a.sign() < 0) == (b.sign() < 0))) ++q;
  return q;
}

Integer pow_int(const Integer& base, unsigned exponent) {
  Integer result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Integer g = gcd(a, b);
  Integer r = a / g * b;
  return r.sign() < 0 ? Integer(-r) : r;
}

}  // namespace latmink

std::size_t std::hash<latmink::Integer>::operator()(const latmink::Integer& v) const noexcept {
  return boost::multiprecision::hash_value(v);
}
