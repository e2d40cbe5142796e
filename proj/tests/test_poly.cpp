#include "sbcas/fraction.hpp"
#include "sbcas/poly.hpp"

#include <doctest.h>

#include <random>

using namespace sbcas;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<BigRat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

BigRat Q(long n, long d) { return BigRat(BigInt(n), BigInt(d)); }

// Brute-force rational roots: every +-p/q with p | c0 and q | lead, for
// integer polynomials with small coefficients.
std::vector<BigRat> brute_roots(const Poly& p) {
  std::vector<BigRat> out;
  std::vector<BigRat> cands{BigRat(0)};
  for (long a = 1; a <= 60; ++a) {
    for (long b = 1; b <= 12; ++b) {
      cands.push_back(Q(a, b));
      cands.push_back(Q(-a, b));
    }
  }
  for (const auto& c : cands) {
    if (eval_at(p, c).is_zero() && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("construction trims and prints") {
  CHECK(P({1, 0, 0}).degree() == 0);
  CHECK(P({0, 0}).is_zero());
  CHECK(Poly().degree() == Poly::kZeroDegree);
  CHECK(P({-1, 0, 1}).to_string() == "x^2 - 1");
  CHECK(Poly({Q(3, 1), Q(1, 2)}).to_string() == "1/2*x + 3");
  CHECK(Poly().to_string() == "0");
}

TEST_CASE("ring arithmetic") {
  const Poly a = P({-1, 1});  // x - 1
  const Poly b = P({1, 1});   // x + 1
  CHECK(a * b == P({-1, 0, 1}));
  CHECK(a + b == P({0, 2}));
  CHECK(a - a == Poly());
  CHECK(b.pow(3) == P({1, 3, 3, 1}));
  CHECK(derivative(P({5, 3, 0, 2})) == P({3, 0, 6}));
  CHECK(eval_at(P({1, 0, 1}), Q(1, 2)) == Q(5, 4));
}

TEST_CASE("division and gcd") {
  const auto [q, r] = divmod(P({-1, 0, 0, 0, 1}), P({-1, 0, 1}));
  CHECK(q == P({1, 0, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
  CHECK(gcd(P({0, 2}), Poly()) == P({0, 1}));
  CHECK(gcd(P({1, 0, 1}), P({-1, 1})).is_one());
  CHECK_THROWS_AS(gcd(Poly(), Poly()), std::domain_error);
  CHECK_THROWS_AS(divmod(P({1}), Poly()), std::domain_error);
  CHECK_THROWS_AS(exact_div(P({1, 0, 1}), P({1, 1})), std::domain_error);
  CHECK(exact_div(P({-1, 0, 1}), P({1, 1})) == P({-1, 1}));
}

TEST_CASE("divmod identity on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<BigRat> pc, dc;
    for (int k = 0, n = deg(rng); k <= n; ++k) pc.emplace_back(c(rng));
    for (int k = 0, n = deg(rng); k <= n; ++k) dc.emplace_back(c(rng));
    const Poly p(pc), d(dc);
    if (d.is_zero()) continue;
    const auto [q, r] = divmod(p, d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
    if (!p.is_zero()) {
      const Poly g = gcd(p, d);
      CHECK(g.is_monic());
      CHECK(divmod(p, g).rem.is_zero());
      CHECK(divmod(d, g).rem.is_zero());
    }
  }
}

TEST_CASE("rational roots with multiplicity") {
  // (2x - 1)^2 (x + 3) (x^2 + 1)
  const Poly p = P({-1, 2}).pow(2) * P({3, 1}) * P({1, 0, 1});
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == RationalRoot{BigRat(-3), 1});
  CHECK(roots[1] == RationalRoot{Q(1, 2), 2});
  CHECK(linear_part(p) == P({-1, 2}).monic().pow(2) * P({3, 1}));
  CHECK(rational_roots(P({1, 0, 1})).empty());
  CHECK(rational_roots(P({5})).empty());
  CHECK(rational_roots(P({0, 0, 1})) == std::vector<RationalRoot>{{BigRat(0), 2}});
  CHECK_THROWS_AS(rational_roots(Poly()), std::domain_error);
}

TEST_CASE("rational roots match a brute-force search") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  for (int i = 0; i < 150; ++i) {
    Poly p = P({1});
    std::uniform_int_distribution<int> k(0, 4);
    for (int j = 0, n = k(rng); j < n; ++j) {
      const long a = num(rng), b = den(rng);
      p = p * P({-a, b});
    }
    if (k(rng) % 2 == 0) p = p * P({2, 0, 1});
    std::vector<BigRat> got;
    for (const auto& r : rational_roots(p)) got.push_back(r.root);
    CHECK(got == brute_roots(p));
  }
}

TEST_CASE("rational roots of a high-degree polynomial with big coefficients") {
  Poly p = P({1});
  for (long a = 1; a <= 12; ++a) p = p * P({-(1000003 + a), 7 + a});
  const auto roots = rational_roots(p);
  CHECK(roots.size() == 12);
  CHECK(rational_roots(P({-1000003, 7}).pow(12)) == std::vector<RationalRoot>{{Q(1000003, 7), 12}});
  for (const auto& r : roots) CHECK(eval_at(p, r.root).is_zero());
}

TEST_CASE("primitive integer coefficients") {
  const Poly p({Q(1, 2), Q(-3, 4)});
  CHECK(primitive_integer_coeffs(p) == std::vector<BigInt>{BigInt(-2), BigInt(3)});
}

TEST_CASE("canonical fractions reduce and compare by value") {
  const CanonicalFraction f(P({-1, 0, 0, 0, 1}), P({-1, 0, 1}));
  CHECK(f.is_polynomial());
  CHECK(f.num() == P({1, 0, 1}));
  const CanonicalFraction g(P({2}), P({0, 4}));
  CHECK(g.num() == Poly::constant(Q(1, 2)));
  CHECK(g.den() == P({0, 1}));
  CHECK(g + (-g) == CanonicalFraction());
  CHECK(g * g.inverse() == CanonicalFraction(P({1})));
  CHECK_THROWS_AS(CanonicalFraction().inverse(), std::domain_error);
  CHECK_THROWS_AS(CanonicalFraction(P({1}), Poly()), std::domain_error);
}
