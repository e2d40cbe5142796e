#include "sbcas/factor.hpp"
#include "sbcas/syntax.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using namespace sbcas;

namespace {

// Plain trial division, independent of the library.
PrimeFactorization by_trial_division(long long n) {
  PrimeFactorization pf;
  pf.sign = n > 0 ? 1 : (n < 0 ? -1 : 0);
  unsigned long long m = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  for (unsigned long long p = 2; p * p <= m; ++p) {
    unsigned long e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) pf.factors.push_back({BigInt(static_cast<long>(p)), e});
  }
  if (m > 1) pf.factors.push_back({BigInt(static_cast<long>(m)), 1});
  return pf;
}

}  // namespace

TEST_CASE("factor_int of 12") {
  const auto pf = factor_int(BigInt(12));
  CHECK(pf.sign == 1);
  REQUIRE(pf.factors.size() == 2);
  CHECK(pf.factors[0] == PrimePower{BigInt(2), 2});
  CHECK(pf.factors[1] == PrimePower{BigInt(3), 1});
  CHECK(to_maple_list(pf) == "[1, [[2, 2], [3, 1]]]");
}

TEST_CASE("factor_int agrees with trial division on small integers") {
  for (long long n = -3000; n <= 3000; ++n) {
    const auto pf = factor_int(BigInt(static_cast<long>(n)));
    CHECK(pf == by_trial_division(n));
    CHECK(remult(pf) == BigInt(static_cast<long>(n)));
    CHECK_NOTHROW(pf.validate());
  }
}

TEST_CASE("factor_int on large semiprimes and prime powers") {
  const BigInt p = BigInt::parse("1000000007");
  const BigInt q = BigInt::parse("998244353");
  auto pf = factor_int(p * q);
  REQUIRE(pf.factors.size() == 2);
  CHECK(pf.factors[0].prime == q);
  CHECK(pf.factors[1].prime == p);

  const BigInt m89 = pow(BigInt(2), 89) - BigInt(1);
  CHECK(is_prime(m89));
  pf = factor_int(-(m89 * pow(BigInt(3), 4)));
  CHECK(pf.sign == -1);
  CHECK(pf.factors == std::vector<PrimePower>{{BigInt(3), 4}, {m89, 1}});

  pf = factor_int(pow(BigInt(2), 64) - BigInt(1));
  CHECK(remult(pf) == pow(BigInt(2), 64) - BigInt(1));
  CHECK(pf.factors.size() == 7);
}

TEST_CASE("is_prime on Carmichael numbers and small values") {
  for (long c : {561L, 1105L, 1729L, 2465L, 2821L, 6601L, 8911L}) CHECK_FALSE(is_prime(BigInt(c)));
  CHECK_FALSE(is_prime(BigInt(0)));
  CHECK_FALSE(is_prime(BigInt(1)));
  CHECK_FALSE(is_prime(BigInt(-7)));
  CHECK(is_prime(BigInt(2)));
  CHECK(is_prime(BigInt(97)));
}

TEST_CASE("validate rejects broken factorizations") {
  PrimeFactorization pf{1, {{BigInt(3), 1}, {BigInt(2), 1}}};
  CHECK_THROWS_AS(pf.validate(), std::invalid_argument);
  pf = {1, {{BigInt(4), 1}}};
  CHECK_THROWS_AS(pf.validate(), std::invalid_argument);
  pf = {1, {{BigInt(2), 0}}};
  CHECK_THROWS_AS(pf.validate(), std::invalid_argument);
  pf = {0, {{BigInt(2), 1}}};
  CHECK_THROWS_AS(pf.validate(), std::invalid_argument);
}

TEST_CASE("divisors") {
  CHECK(divisors(BigInt(12)) ==
        std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(3), BigInt(4), BigInt(6), BigInt(12)});
  CHECK(divisors(BigInt(1)) == std::vector<BigInt>{BigInt(1)});
}

TEST_CASE("factor on terms") {
  const auto out = factor(Term::int_lit(BigInt(12)));
  REQUIRE(out);
  CHECK(print(*out) == "1 * (2^2 * 3^1)");
  CHECK(print(*out, Format::Sexpr) == "(* 1 (* (^ 2 2) (^ 3 1)))");
  CHECK(is_prime_decomp(*out));

  const auto zero = factor(Term::int_lit(BigInt(0)));
  REQUIRE(zero);
  CHECK(print(*zero) == "0");
  const auto one = factor(Term::int_lit(BigInt(1)));
  REQUIRE(one);
  CHECK(print(*one) == "1");

  CHECK_FALSE(factor(Term::int_lit(BigInt(-12))));
  CHECK_FALSE(factor(int_ops().add(Term::int_lit(BigInt(3)), Term::int_lit(BigInt(4)))));
  CHECK_FALSE(factor(Term::rat_lit(BigRat(12))));
  CHECK_FALSE(factor(int_ops().var()));
}

TEST_CASE("decomp_to_term covers negative signs") {
  const Term t = decomp_to_term(factor_int(BigInt(-12)));
  CHECK(is_prime_decomp(t));
  CHECK(print(t) == "-1 * (2^2 * 3^1)");
  CHECK(print(decomp_to_term(factor_int(BigInt(-1)))) == "-1");
  CHECK_FALSE(is_prime_decomp(Term::int_lit(BigInt(12))));
}

TEST_CASE("maple list for negatives and primes") {
  CHECK(to_maple_list(factor_int(BigInt(-12))) == "[-1, [[2, 2], [3, 1]]]");
  CHECK(to_maple_list(factor_int(BigInt(7))) == "[1, [[7, 1]]]");
  CHECK(to_maple_list(factor_int(BigInt(1))) == "[1, []]");
  CHECK_THROWS(to_maple_list(factor_int(BigInt(0))));
}

TEST_CASE("random integers up to 1e12 remultiply") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dist(-1000000000000L, 1000000000000L);
  for (int i = 0; i < 300; ++i) {
    const BigInt n(dist(rng));
    const auto pf = factor_int(n);
    CHECK(remult(pf) == n);
    for (const auto& pp : pf.factors) CHECK(is_prime(pp.prime));
  }
}
