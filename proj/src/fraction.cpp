#include "sbcas/fraction.hpp"

#include <stdexcept>

namespace sbcas {

CanonicalFraction::CanonicalFraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::constant(BigRat(1));
    return;
  }
  const Poly g = gcd(num, den);
  Poly n = exact_div(num, g);
  Poly d = exact_div(den, g);
  const BigRat lc = d.lead();
  num_ = n.scale(inv(lc));
  den_ = d.scale(inv(lc));
}

CanonicalFraction operator+(const CanonicalFraction& a, const CanonicalFraction& b) {
  if (a.den_ == b.den_) return CanonicalFraction(a.num_ + b.num_, a.den_);
  return CanonicalFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CanonicalFraction operator*(const CanonicalFraction& a, const CanonicalFraction& b) {
  return CanonicalFraction(a.num_ * b.num_, a.den_ * b.den_);
}

CanonicalFraction CanonicalFraction::operator-() const {
  CanonicalFraction r = *this;
  r.num_ = -num_;
  return r;
}

CanonicalFraction CanonicalFraction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero fraction");
  return CanonicalFraction(den_, num_);
}

std::string CanonicalFraction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sbcas
