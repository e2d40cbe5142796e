#pragma once

// Arbitrary-precision integers and exact rationals.
//
// Both types are thin value wrappers over GMP. They keep the canonical-form
// invariants (no negative zero, reduced fractions with positive denominator)
// and report division by zero as an exception rather than a value.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace sbcas {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses optional sign followed by decimal digits. Throws std::invalid_argument.
  static BigInt parse(std::string_view text);

  std::string to_string() const { return v_.get_str(); }
  const mpz_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  double to_double() const { return v_.get_d(); }

  friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ + b.v_)); }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ - b.v_)); }
  friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.v_ * b.v_)); }
  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

struct DivMod {
  BigInt quot;
  BigInt rem;
};

/// Euclidean division: a = q*d + r with 0 <= r < |d|. Throws std::domain_error on d = 0.
DivMod divmod(const BigInt& a, const BigInt& d);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);
BigInt pow(const BigInt& base, unsigned long exponent);
/// True when d divides a exactly (d != 0).
bool divides(const BigInt& d, const BigInt& a);

class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  /// num/den, reduced. Throws std::domain_error when den = 0.
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "n", "-n", "n/d" and finite decimals such as "0.25".
  static BigRat parse(std::string_view text);

  BigInt num() const { return BigInt(v_.get_num()); }
  BigInt den() const { return BigInt(v_.get_den()); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  /// "n" for integers, otherwise "n/d".
  std::string to_string() const;
  const mpq_class& raw() const { return v_; }

  friend BigRat operator+(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ + b.v_)); }
  friend BigRat operator-(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ - b.v_)); }
  friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ * b.v_)); }
  /// Throws std::domain_error when b = 0.
  friend BigRat operator/(const BigRat& a, const BigRat& b);
  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// Multiplicative inverse. Throws std::domain_error on zero.
BigRat inv(const BigRat& a);
BigRat abs(const BigRat& a);
/// Integer power; negative exponents invert (and throw on a zero base).
BigRat pow_int(const BigRat& base, long exponent);

}  // namespace sbcas
