#include "sbcas/factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace sbcas {

namespace {

const mpz_class kDeterministicBound("3317044064679887385961981");
constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::array<unsigned long, 7> kExtraWitnesses = {43, 47, 53, 59, 61, 67, 71};
constexpr unsigned long kTrialLimit = 1UL << 16;

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned long s, unsigned long a) {
  mpz_class base(a), x;
  base %= n;
  if (base == 0) return true;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

mpz_class brent_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  // Fixed sequence of polynomial constants keeps the factorization reproducible.
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(mpz_class(x - y))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(BigInt(n))) {
    ++out[n];
    return;
  }
  const mpz_class d = brent_rho(n);
  split(d, out);
  split(mpz_class(n / d), out);
}

}  // namespace

bool is_prime(const BigInt& n_big) {
  const mpz_class& n = n_big.raw();
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  mpz_class d = n - 1;
  unsigned long s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned long a : kWitnesses) {
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  if (n >= kDeterministicBound) {
    for (unsigned long a : kExtraWitnesses) {
      if (!miller_rabin_round(n, d, s, a)) return false;
    }
  }
  return true;
}

void PrimeFactorization::validate() const {
  if (sign < -1 || sign > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  if (sign == 0 && !factors.empty()) throw std::invalid_argument("zero must have an empty factor list");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (e < 1) throw std::invalid_argument("exponent must be at least 1");
    if (!is_prime(p)) throw std::invalid_argument(p.to_string() + " is not prime");
    if (i > 0 && !(factors[i - 1].prime < p)) {
      throw std::invalid_argument("primes must be strictly increasing");
    }
  }
}

PrimeFactorization factor_int(const BigInt& n) {
  PrimeFactorization pf;
  pf.sign = n.sign();
  if (pf.sign == 0) return pf;

  mpz_class m = ::abs(n.raw());
  std::map<mpz_class, unsigned long> found;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[mpz_class(p)];
    }
  };
  strip(2);
  strip(3);
  for (unsigned long k = 5; k <= kTrialLimit && mpz_class(k) * k <= m; k += 6) {
    strip(k);
    strip(k + 2);
  }
  split(m, found);
  for (const auto& [p, e] : found) pf.factors.push_back({BigInt(p), e});
  return pf;
}

BigInt remult(const PrimeFactorization& pf) {
  pf.validate();
  BigInt acc(pf.sign);
  for (const auto& [p, e] : pf.factors) acc *= pow(p, e);
  return acc;
}

std::vector<BigInt> divisors(const BigInt& n) {
  if (n.sign() <= 0) throw std::invalid_argument("divisors requires a positive integer");
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factor_int(n).factors) {
    const std::size_t existing = divs.size();
    BigInt pk(1);
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// ---------------------------------------------------------------------------
// Syntax side

bool is_numeral(const Term& t) {
  const auto* lit = t.get<IntLit>();
  return lit && lit->value.sign() >= 0;
}

namespace {

std::optional<BigInt> numeral_value(const Term& t) {
  if (!is_numeral(t)) return std::nullopt;
  return t.get<IntLit>()->value;
}

bool is_unit_sign(const Term& t) {
  if (const auto* lit = t.get<IntLit>()) return lit->value == BigInt(1);
  if (auto inner = int_ops().match_neg(t)) {
    const auto* lit = inner->get<IntLit>();
    return lit && lit->value == BigInt(1);
  }
  return false;
}

// One factor p^e with p a prime numeral and e a numeral >= 1; returns p.
std::optional<BigInt> prime_power_base(const Term& t) {
  auto pw = int_ops().match_pow(t);
  if (!pw) return std::nullopt;
  auto p = numeral_value(pw->first);
  auto e = numeral_value(pw->second);
  if (!p || !e || e->sign() <= 0 || !is_prime(*p)) return std::nullopt;
  return p;
}

}  // namespace

bool is_prime_decomp(const Term& t) {
  if (const auto* lit = t.get<IntLit>(); lit && lit->value.is_zero()) return true;
  if (is_unit_sign(t)) return true;

  auto top = int_ops().match_mul(t);
  if (!top || !is_unit_sign(top->first)) return false;
  Term rest = top->second;
  std::optional<BigInt> last;
  while (true) {
    if (auto cell = int_ops().match_mul(rest)) {
      auto p = prime_power_base(cell->first);
      if (!p || (last && !(*last < *p))) return false;
      last = p;
      rest = cell->second;
      continue;
    }
    auto p = prime_power_base(rest);
    return p && (!last || *last < *p);
  }
}

Term decomp_to_term(const PrimeFactorization& pf) {
  pf.validate();
  const Ops& z = int_ops();
  if (pf.sign == 0) return Term::int_lit(BigInt(0));
  Term sign = pf.sign > 0 ? Term::int_lit(BigInt(1)) : z.neg(Term::int_lit(BigInt(1)));
  if (pf.factors.empty()) return sign;

  auto power = [&](const PrimePower& pp) {
    return z.pow(Term::int_lit(pp.prime), Term::int_lit(BigInt(static_cast<long>(pp.exponent))));
  };
  Term product = power(pf.factors.back());
  for (std::size_t i = pf.factors.size() - 1; i-- > 0;) product = z.mul(power(pf.factors[i]), product);
  return z.mul(sign, product);
}

std::optional<Term> factor(const Term& t) {
  auto n = numeral_value(t);
  if (!n) return std::nullopt;
  return decomp_to_term(factor_int(*n));
}

std::string to_maple_list(const PrimeFactorization& pf) {
  pf.validate();
  if (pf.sign == 0) throw std::invalid_argument("the Maple list form has no representation of 0");
  std::string out = "[" + std::to_string(pf.sign) + ", [";
  for (std::size_t i = 0; i < pf.factors.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + pf.factors[i].prime.to_string() + ", " + std::to_string(pf.factors[i].exponent) + "]";
  }
  out += "]]";
  return out;
}

}  // namespace sbcas
