#include "latmink/gauge.hpp"

#include <stdexcept>

namespace latmink {

SqrtRational SqrtRational::from_rational(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("SqrtRational: negative value");
  return SqrtRational(q * q);
}

SqrtRational SqrtRational::sqrt_of(const Rational& radicand) {
  if (radicand.sign() < 0) throw std::domain_error("SqrtRational: negative radicand");
  return SqrtRational(radicand);
}

std::optional<Rational> SqrtRational::rational_value() const {
  Rational root;
  if (is_rational_square(radicand_, &root)) return root;
  return std::nullopt;
}

SqrtRational SqrtRational::reciprocal_times(const Rational& c) const {
  if (radicand_.is_zero()) throw std::domain_error("SqrtRational: reciprocal of zero");
  if (c.sign() < 0) throw std::domain_error("SqrtRational: negative factor");
  return SqrtRational(c * c / radicand_);
}

SqrtRational SqrtRational::scaled(const Rational& t) const {
  if (t.sign() < 0) throw std::domain_error("SqrtRational: negative factor");
  return SqrtRational(radicand_ * t * t);
}

std::strong_ordering operator<=>(const SqrtRational& a, const Rational& q) {
  if (q.sign() < 0) return std::strong_ordering::greater;
  return a.radicand_ <=> q * q;
}

std::string SqrtRational::str() const {
  if (auto v = rational_value()) return v->str();
  return "sqrt(" + radicand_.str() + ")";
}

SqrtRational SqrtRational::parse(std::string_view text) {
  constexpr std::string_view prefix = "sqrt(";
  if (text.starts_with(prefix) && text.ends_with(")"))
    return sqrt_of(Rational::parse(text.substr(prefix.size(), text.size() - prefix.size() - 1)));
  return from_rational(Rational::parse(text));
}

}  // namespace latmink
