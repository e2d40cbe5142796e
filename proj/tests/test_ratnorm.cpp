#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <doctest.h>

using namespace sbcas;

namespace {

Term rx(const char* s) { return parse(s, Lang::RatExpr); }
Term rf(const char* s) { return parse(s, Lang::RatFun); }
BigRat Q(long n, long d = 1) { return BigRat(BigInt(n), BigInt(d)); }

std::string norm(const char* s) {
  const auto out = norm_rat_expr(rx(s));
  REQUIRE(out);
  return print(*out);
}

std::string norm_fun(const char* s) {
  const auto out = norm_rat_fun(rf(s));
  REQUIRE(out);
  return print(*out);
}

}  // namespace

TEST_CASE("normal forms of the worked examples") {
  CHECK(norm("(x^4-1)/(x^2-1)") == "x^2 + 1");
  CHECK(norm("x/x") == "1");
  CHECK(norm("1/x - 1/x") == "0");
  CHECK(norm("1/(x-x)") == "1 / 0");
}

TEST_CASE("normal form rendering") {
  CHECK(norm("(x+1)^2") == "x^2 + 2 * x + 1");
  CHECK(norm("2*x - 3*x^3") == "-(3 * x^3) + 2 * x");
  CHECK(norm("1/(2*x)") == "(1/2) / x");
  CHECK(norm("(x+1)/(x^2-1)") == "1 / (x - 1)");
  CHECK(norm("x^0") == "1");
  CHECK(norm("0/x") == "0");
}

TEST_CASE("val_in_f reads x as an indeterminate") {
  const auto v = val_in_f(rx("(x^4-1)/(x^2-1)"));
  REQUIRE(v);
  CHECK(v->is_polynomial());
  CHECK(v->num().to_string() == "x^2 + 1");
  CHECK_FALSE(val_in_f(rx("1/(x-x)")));
  CHECK(val_in_f(rx("1/x - 1/x"))->is_zero());
  CHECK_THROWS_AS(val_in_f(parse("sin(x)", Lang::DiffExpr)), std::invalid_argument);
}

TEST_CASE("strict evaluation differs from the fraction-field value") {
  const Term t = rx("(x^4-1)/(x^2-1)");
  CHECK_FALSE(eval_rat_at(t, Q(1)));
  CHECK_FALSE(eval_rat_at(t, Q(-1)));
  CHECK(eval_rat_at(t, Q(2)) == Q(5));
  const auto n = norm_rat_expr(t);
  CHECK(eval_rat_at(*n, Q(1)) == Q(2));
  CHECK(eval_rat_at(rx("x/x"), Q(0)) == std::nullopt);
  CHECK(eval_rat_at(rx("1/x - 1/x"), Q(3, 7)) == Q(0));
}

TEST_CASE("Norm and Quasinorm predicates") {
  CHECK(is_norm(rx("x^2 + 1")));
  CHECK(is_norm(undefined_normal_form()));
  CHECK_FALSE(is_norm(rx("x/x")));
  CHECK_FALSE(is_norm(rx("1 + x^2")));
  CHECK(is_quasinorm(rx("x / x")));
  CHECK(is_quasinorm(rx("(x^2 - 1) / (x - 1)")));
  CHECK_FALSE(is_quasinorm(rx("(x^2 + 1) / (x^2 + 1)")));
  CHECK(is_quasinorm(rx("x * x / x")));
  CHECK_FALSE(is_quasinorm(rx("1/x + 1")));
  CHECK_FALSE(is_quasinorm(rx("(x^3 + x) / (x^2 + 1)")));
}

TEST_CASE("rational function normalization keeps singular points") {
  CHECK(norm_fun("fun x -> x/x") == "fun x -> x / x");
  CHECK(norm_fun("fun x -> (x^2+1)/(x^2+1)") == "fun x -> 1");
  CHECK(norm_fun("fun x -> (x^4-1)/(x^2-1)") == "fun x -> (x^4 - 1) / (x^2 - 1)");
  CHECK(norm_fun("fun x -> (x^3 + x)/(x^2 + 1)") == "fun x -> x");
  CHECK(norm_fun("fun x -> 1/(1/x)") == "fun x -> x^2 / x");

  const Term f = rf("fun x -> 1/(1/x)");
  const Term g = *norm_rat_fun(f);
  for (long k = -4; k <= 4; ++k) CHECK(fn_quasi_equal_at(f, g, Q(k, 2)));
  CHECK_FALSE(eval_rat_at(*body(g), Q(0)));
  CHECK_FALSE(norm_rat_fun(rx("x")));
}

TEST_CASE("inverted numerators list every candidate singularity") {
  const auto ps = inverted_numerators(rx("1/(x-1) + 1/(1/(x^2-4))"));
  REQUIRE(ps.size() == 3);
  std::vector<std::string> txt;
  for (const auto& p : ps) txt.push_back(p.to_string());
  CHECK(std::find(txt.begin(), txt.end(), "x - 1") != txt.end());
  CHECK(std::find(txt.begin(), txt.end(), "x^2 - 4") != txt.end());
}

TEST_CASE("predicates for the two languages") {
  CHECK(is_rat_expr(rx("x^2 + 1/2")));
  CHECK_FALSE(is_rat_expr(parse("sin(x)", Lang::DiffExpr)));
  CHECK_FALSE(is_rat_expr(rf("fun x -> x")));
  CHECK(is_rat_fun(rf("fun x -> x")));
  CHECK_FALSE(is_rat_fun(rx("x")));
  CHECK(body(rf("fun x -> x")) == rat_ops().var());
  CHECK_FALSE(body(rx("x")));
  CHECK_FALSE(norm_rat_expr(parse("x^(1/2)", Lang::DiffExpr)));
}

TEST_CASE("poly_to_term and frac_to_term round trip through val_in_f") {
  const Poly p({BigRat(-1), BigRat(0), Q(3, 2)});
  CHECK(val_in_f(poly_to_term(p)) == CanonicalFraction(p));
  const CanonicalFraction c(p, Poly({BigRat(5), BigRat(1)}));
  CHECK(val_in_f(frac_to_term(c)) == c);
  CHECK(print(poly_to_term(Poly())) == "0");
}
