#pragma once

// Integer factoring as a syntax-based algorithm.
//
// factor() maps a numeral term to a signed prime decomposition term
//
//     s * (p0^e0 * (p1^e1 * ... * pk^ek))     s in {1, -1}
//
// (right-associated, sign outermost, every exponent written out), or to the
// literal 0. For +1 and -1 the product is empty and the decomposition is the
// bare literal 1 or -(1).

#include "sbcas/exact.hpp"
#include "sbcas/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbcas {

struct PrimePower {
  BigInt prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct PrimeFactorization {
  int sign = 0;  // -1, 0 or +1
  std::vector<PrimePower> factors;

  /// Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

/// Deterministic for n < 3.3e24; beyond that a strong probable-prime test.
bool is_prime(const BigInt& n);

PrimeFactorization factor_int(const BigInt& n);
BigInt remult(const PrimeFactorization& pf);
/// Positive divisors of n > 0, ascending.
std::vector<BigInt> divisors(const BigInt& n);

bool is_numeral(const Term& t);
bool is_prime_decomp(const Term& t);
Term decomp_to_term(const PrimeFactorization& pf);
/// nullopt ("undefined") unless t is a numeral.
std::optional<Term> factor(const Term& t);

/// Maple ifactors-style text, e.g. "[1, [[2, 2], [3, 1]]]". Throws for sign 0.
std::string to_maple_list(const PrimeFactorization& pf);

}  // namespace sbcas
