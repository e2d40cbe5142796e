#pragma once

#include "sbcas/poly.hpp"

#include <string>

namespace sbcas {

/// An element of Q(x): num/den with gcd(num, den) = 1 and den monic.
class CanonicalFraction {
 public:
  CanonicalFraction() : num_(), den_(Poly::constant(BigRat(1))) {}
  explicit CanonicalFraction(Poly p) : num_(std::move(p)), den_(Poly::constant(BigRat(1))) {}
  /// Reduces num/den. Throws std::domain_error when den = 0.
  CanonicalFraction(const Poly& num, const Poly& den);

  static CanonicalFraction x() { return CanonicalFraction(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend CanonicalFraction operator+(const CanonicalFraction& a, const CanonicalFraction& b);
  friend CanonicalFraction operator*(const CanonicalFraction& a, const CanonicalFraction& b);
  CanonicalFraction operator-() const;
  /// Throws std::domain_error on zero.
  CanonicalFraction inverse() const;

  friend bool operator==(const CanonicalFraction&, const CanonicalFraction&) = default;

  /// "(num)/(den)" or just "num".
  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace sbcas
