#include "sbcas/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace sbcas {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt BigInt::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  mpz_class v;
  v.set_str(std::string(digits), 10);
  if (text.front() == '-') v = -v;
  return BigInt(std::move(v));
}

DivMod divmod(const BigInt& a, const BigInt& d) {
  if (d.is_zero()) throw std::domain_error("integer division by zero");
  mpz_class q, r;
  // fdiv gives floor semantics; adjust for negative divisors to keep r >= 0.
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), d.raw().get_mpz_t());
  if (sgn(r) < 0) {
    r += abs(d.raw());
    q += (d.sign() > 0 ? -1 : 1);
  }
  return {BigInt(std::move(q)), BigInt(std::move(r))};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(g));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(l));
}

BigInt abs(const BigInt& a) { return BigInt(mpz_class(::abs(a.raw()))); }

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

bool divides(const BigInt& d, const BigInt& a) {
  if (d.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = BigInt::parse(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return BigRat(num, BigInt::parse(den_text));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    std::string whole(text.substr(0, dot));
    const bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const BigInt int_part = abs(BigInt::parse(whole));
    const BigInt scale = pow(BigInt(10), frac.size());
    BigRat r(int_part * scale + BigInt::parse(frac), scale);
    return negative ? -r : r;
  }
  return BigRat(BigInt::parse(text));
}

std::string BigRat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

BigRat operator/(const BigRat& a, const BigRat& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return BigRat(mpq_class(a.v_ / b.v_));
}

BigRat inv(const BigRat& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return BigRat(1) / a;
}

BigRat abs(const BigRat& a) { return BigRat(mpq_class(::abs(a.raw()))); }

BigRat pow_int(const BigRat& base, long exponent) {
  if (exponent < 0) return pow_int(inv(base), -exponent);
  const auto e = static_cast<unsigned long>(exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return BigRat(BigInt(std::move(n)), BigInt(std::move(d)));
}

}  // namespace sbcas
