#pragma once

// Univariate polynomials over Q in expanded coefficient form.

#include "sbcas/exact.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace sbcas {

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Poly() = default;
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit Poly(std::vector<BigRat> coeffs);
  static Poly constant(const BigRat& c);
  /// The monomial c * x^k.
  static Poly monomial(const BigRat& c, std::size_t k);
  static Poly x() { return monomial(BigRat(1), 1); }

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  BigRat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRat(0); }
  /// Leading coefficient; zero for the zero polynomial.
  BigRat lead() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == BigRat(1); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == BigRat(1); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly scale(const BigRat& c) const;
  Poly pow(unsigned long e) const;
  /// Divides by the leading coefficient. The zero polynomial stays zero.
  Poly monic() const;

  /// e.g. "x^2 - 1", "1/2*x + 3", "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigRat> coeffs_;
};

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

/// p = q*d + r with deg r < deg d. Throws std::domain_error on d = 0.
PolyDivMod divmod(const Poly& p, const Poly& d);
/// Monic gcd; gcd(p, 0) = monic(p). Throws std::domain_error when both are zero.
Poly gcd(const Poly& p, const Poly& q);
/// Exact quotient p / d; throws std::domain_error when d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);
/// Horner evaluation.
BigRat eval_at(const Poly& p, const BigRat& a);
Poly derivative(const Poly& p);

struct RationalRoot {
  BigRat root;
  unsigned multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending. Throws std::domain_error on zero.
std::vector<RationalRoot> rational_roots(const Poly& p);
/// Monic product of (x - r)^m over the rational roots of p. Throws on zero.
Poly linear_part(const Poly& p);

/// Scales p to a primitive integer polynomial with positive leading coefficient.
std::vector<BigInt> primitive_integer_coeffs(const Poly& p);

}  // namespace sbcas
