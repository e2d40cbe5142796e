#include "sbcas/diff.hpp"
#include "sbcas/syntax.hpp"

#include <doctest.h>

#include <cmath>

using namespace sbcas;

namespace {

Term dx(const char* s) { return parse(s, Lang::DiffExpr); }

std::string d(const char* s) {
  const auto out = diff(dx(s));
  REQUIRE(out);
  return print(*out);
}

double at(const Term& t, double a) {
  const auto v = eval_real(t, a);
  REQUIRE(v);
  return *v;
}

}  // namespace

TEST_CASE("derivatives of the worked examples") {
  CHECK(*diff(dx("sin(x^2+x)")) == simplify(dx("(2*x+1)*cos(x^2+x)")));
  CHECK(*diff(dx("ln(x^2-1)")) == simplify(dx("2*x/(x^2-1)")));
  CHECK(d("sin(x^2+x)") == "(2 * x + 1) * cos(x^2 + x)");
  CHECK(d("ln(x^2-1)") == "2 * x / (x^2 - 1)");
}

TEST_CASE("basic rules") {
  CHECK(d("x") == "1");
  CHECK(d("7") == "0");
  CHECK(d("x^3") == "3 * x^2");
  CHECK(d("exp(x)") == "exp(x)");
  CHECK(d("cos(x)") == "-sin(x)");
  CHECK(d("ln(x)") == "inv(x)");
  CHECK(d("x^(1/2)") == "(1/2) * x^(-1/2)");
  CHECK(d("2*x + 3") == "2");
}

TEST_CASE("simplify folds constants and identities") {
  CHECK(print(simplify(dx("0 * sin(x) + 1 * x"))) == "x");
  CHECK(print(simplify(dx("2 * 3 - 1"))) == "5");
  CHECK(print(simplify(dx("x^1"))) == "x");
  CHECK(print(simplify(dx("x^0"))) == "x^0");
  CHECK(print(simplify(dx("exp(0) + ln(1)"))) == "1");
  CHECK(print(simplify(dx("-(-x)"))) == "x");
  CHECK(print(simplify(dx("1 - 3"))) == "-2");
  CHECK(simplify(simplify(dx("x * 1 + 0"))) == simplify(dx("x * 1 + 0")));
}

TEST_CASE("symbolic derivative agrees with central differences") {
  const char* cases[] = {"sin(x)*exp(x)",   "tan(x)/(1+x^2)",      "ln(x^2+1)^3", "x^(3/2)*cos(x)",
                         "exp(sin(x))",     "1/(x^2+1) - x^(1/3)", "ln(exp(x))",  "(x+2)^(-2)"};
  for (const char* s : cases) {
    const Term t = dx(s);
    const Term dt = *diff(t);
    for (double a : {0.3, 0.7, 1.4, 2.2}) {
      const double h = 1e-5;
      const double fd = (at(t, a + h) - at(t, a - h)) / (2 * h);
      CHECK(at(dt, a) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("strict real evaluation") {
  CHECK_FALSE(eval_real(dx("ln(x)"), 0));
  CHECK_FALSE(eval_real(dx("ln(x)"), -1));
  CHECK_FALSE(eval_real(dx("1/x"), 0));
  CHECK_FALSE(eval_real(dx("x^(1/2)"), -1));
  CHECK_FALSE(eval_real(dx("0 * (1/x)"), 0));
  CHECK_FALSE(eval_real(dx("exp(exp(x))"), 10));
  CHECK(at(dx("x^(1/3)"), -8) == doctest::Approx(-2));
  CHECK(at(dx("x^(-2)"), 2) == doctest::Approx(0.25));
  CHECK(at(dx("ln(x^2-1)"), 2) == doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(eval_real(parse("fun x -> x", Lang::RatFun), 1), std::invalid_argument);
}

TEST_CASE("numeric derivative is undefined at a cusp or edge") {
  CHECK(*deriv_numeric(dx("x^2"), 1.5) == doctest::Approx(3.0));
  CHECK_FALSE(deriv_numeric(dx("ln(x)"), 0));
  CHECK_FALSE(deriv_numeric(dx("(x^2)^(1/2)"), 0));
  CHECK_FALSE(deriv_numeric(dx("x^(1/3)"), 0));
  CHECK_FALSE(deriv_numeric(dx("1/x"), 0));
}

TEST_CASE("language membership") {
  CHECK(is_diff_expr(dx("tan(x) + x^(2/3)")));
  CHECK_FALSE(is_diff_expr(parse("x", Lang::RatExpr)));
  CHECK_FALSE(is_diff_expr(real_ops().pow(real_ops().var(), real_ops().var())));
  CHECK_FALSE(diff(parse("x", Lang::RatExpr)));
  CHECK_FALSE(diff(Term::int_lit(BigInt(3))));
}

TEST_CASE("domain of the derivative can be larger than the domain of f") {
  const Term f = dx("ln(x^2-1)");
  const Term g = *diff(f);
  const auto pf = domain_sample(f, -2, 2, 9);
  const auto pg = domain_sample(g, -2, 2, 9);
  REQUIRE(pf.size() == 9);
  for (std::size_t i = 0; i < pf.size(); ++i) {
    const double a = pf[i].point;
    const bool inside = std::abs(a) <= 1;
    CHECK((pf[i].status == Definedness::Undefined) == inside);
    CHECK((pg[i].status == Definedness::Undefined) == (std::abs(a) == 1));
  }
  CHECK_THROWS_AS(domain_sample(f, 1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(domain_sample(f, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("per-term contract check") {
  const auto r = check_spec_diff(dx("ln(x^2-1)"), {-2, -1.5, -1, 0, 1, 1.5, 2});
  CHECK(r.ok());
  CHECK(r.checked == 4);
  CHECK(r.vacuous == 3);
}
