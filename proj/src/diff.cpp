#include "sbcas/diff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbcas {

namespace {

const Ops& R() { return real_ops(); }

Term lit(const BigRat& c) { return c.sign() < 0 ? R().neg(real_lit(-c)) : real_lit(c); }
Term lit(long c) { return lit(BigRat(c)); }

constexpr std::string_view kFunctions[] = {sym::kExp, sym::kLn, sym::kSin, sym::kCos, sym::kTan};

// A literal, or the negation of a literal.
std::optional<BigRat> constant_value(const Term& t) {
  if (auto c = match_real_lit(t)) return c;
  if (auto u = R().match_neg(t)) {
    if (auto c = match_real_lit(*u)) return -*c;
  }
  return std::nullopt;
}

bool is_constant(const Term& t, long v) {
  auto c = constant_value(t);
  return c && *c == BigRat(v);
}

Term derive(const Term& t) {
  if (R().is_var(t)) return lit(1);
  if (match_real_lit(t)) return lit(0);
  if (auto ab = R().match_add(t)) return R().add(derive(ab->first), derive(ab->second));
  if (auto ab = R().match_mul(t)) {
    const auto& [u, v] = *ab;
    return R().add(R().mul(derive(u), v), R().mul(u, derive(v)));
  }
  if (auto u = R().match_neg(t)) return R().neg(derive(*u));
  if (auto u = R().match_inv(t)) return R().neg(R().mul(derive(*u), R().pow(*u, real_lit(BigRat(-2)))));
  if (auto ue = R().match_pow(t)) {
    const Term& u = ue->first;
    const BigRat c = *match_real_lit(ue->second);
    if (c == BigRat(0)) return lit(0);
    if (c == BigRat(1)) return derive(u);
    return R().mul(R().mul(lit(c), R().pow(u, real_lit(c - BigRat(1)))), derive(u));
  }
  if (auto u = R().match_unary(t, sym::kExp)) return R().mul(derive(*u), t);
  if (auto u = R().match_unary(t, sym::kLn)) return R().mul(derive(*u), R().inv(*u));
  if (auto u = R().match_unary(t, sym::kSin)) return R().mul(derive(*u), R().unary(sym::kCos, *u));
  if (auto u = R().match_unary(t, sym::kCos)) {
    return R().neg(R().mul(derive(*u), R().unary(sym::kSin, *u)));
  }
  if (auto u = R().match_unary(t, sym::kTan)) {
    return R().mul(derive(*u), R().pow(R().unary(sym::kCos, *u), real_lit(BigRat(-2))));
  }
  throw std::logic_error("derive: term outside the language");
}

// One bottom-up pass. Exponents are literals and are left as they are.
Term simplify_once(const Term& t) {
  if (auto ab = R().match_add(t)) {
    Term a = simplify_once(ab->first), b = simplify_once(ab->second);
    auto ca = constant_value(a), cb = constant_value(b);
    if (ca && cb) return lit(*ca + *cb);
    if (cb && cb->is_zero()) return a;
    if (ca && ca->is_zero()) return b;
    return R().add(a, b);
  }
  if (auto ab = R().match_mul(t)) {
    Term a = simplify_once(ab->first), b = simplify_once(ab->second);
    auto ca = constant_value(a), cb = constant_value(b);
    if (ca && cb) return lit(*ca * *cb);
    if ((ca && ca->is_zero()) || (cb && cb->is_zero())) return lit(0);
    if (cb && *cb == BigRat(1)) return a;
    if (ca && *ca == BigRat(1)) return b;
    return R().mul(a, b);
  }
  if (auto ue = R().match_pow(t)) {
    Term u = simplify_once(ue->first);
    const BigRat c = *match_real_lit(ue->second);
    if (c == BigRat(1)) return u;
    if (auto cu = constant_value(u); cu && c.is_integer() && abs(c.num()) <= BigInt(64)) {
      if (!cu->is_zero() || c.sign() > 0) return lit(pow_int(*cu, c.num().to_long()));
    }
    return R().pow(u, ue->second);
  }
  if (auto u = R().match_neg(t)) {
    Term a = simplify_once(*u);
    if (auto c = match_real_lit(a); c && !c->is_zero()) return R().neg(a);
    if (auto ca = constant_value(a)) return lit(-*ca);
    if (auto aa = R().match_neg(a)) return *aa;
    return R().neg(a);
  }
  if (auto u = R().match_inv(t)) {
    Term a = simplify_once(*u);
    if (auto ca = constant_value(a); ca && !ca->is_zero()) return lit(inv(*ca));
    return R().inv(a);
  }
  for (std::string_view fn : kFunctions) {
    if (auto u = R().match_unary(t, fn)) {
      Term a = simplify_once(*u);
      if (is_constant(a, 0)) {
        if (fn == sym::kExp || fn == sym::kCos) return lit(1);
        if (fn == sym::kSin || fn == sym::kTan) return lit(0);
      }
      if (fn == sym::kLn && is_constant(a, 1)) return lit(0);
      return R().unary(fn, a);
    }
  }
  return t;
}

RealResult finite(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

RealResult eval(const Term& t, double a) {
  if (R().is_var(t)) return finite(a);
  if (auto c = match_real_lit(t)) return finite(c->to_double());
  if (auto ab = R().match_add(t)) {
    auto l = eval(ab->first, a);
    if (!l) return std::nullopt;
    auto r = eval(ab->second, a);
    if (!r) return std::nullopt;
    return finite(*l + *r);
  }
  if (auto ab = R().match_mul(t)) {
    auto l = eval(ab->first, a);
    if (!l) return std::nullopt;
    auto r = eval(ab->second, a);
    if (!r) return std::nullopt;
    return finite(*l * *r);
  }
  if (auto ue = R().match_pow(t)) {
    auto u = eval(ue->first, a);
    if (!u) return std::nullopt;
    const auto c = match_real_lit(ue->second);
    if (!c) throw std::invalid_argument("exponent is not a literal");
    const double e = c->to_double();
    if (*u > 0) return finite(std::pow(*u, e));
    if (*u == 0) {
      if (c->sign() > 0) return 0.0;
      return std::nullopt;
    }
    if (divides(BigInt(2), c->den())) return std::nullopt;
    const double mag = std::pow(-*u, e);
    const bool odd = !divides(BigInt(2), c->num());
    return finite(odd ? -mag : mag);
  }
  if (auto u = R().match_neg(t)) {
    auto v = eval(*u, a);
    if (!v) return std::nullopt;
    return -*v;
  }
  if (auto u = R().match_inv(t)) {
    auto v = eval(*u, a);
    if (!v || *v == 0) return std::nullopt;
    return finite(1.0 / *v);
  }
  for (std::string_view fn : kFunctions) {
    if (auto u = R().match_unary(t, fn)) {
      auto v = eval(*u, a);
      if (!v) return std::nullopt;
      if (fn == sym::kExp) return finite(std::exp(*v));
      if (fn == sym::kLn) return *v > 0 ? finite(std::log(*v)) : std::nullopt;
      if (fn == sym::kSin) return finite(std::sin(*v));
      if (fn == sym::kCos) return finite(std::cos(*v));
      if (std::abs(std::cos(*v)) <= 1e-12) return std::nullopt;
      return finite(std::tan(*v));
    }
  }
  throw std::invalid_argument("not a differentiable expression");
}

}  // namespace

bool is_diff_expr(const Term& t) {
  if (R().is_var(t) || match_real_lit(t)) return true;
  if (auto ab = R().match_add(t)) return is_diff_expr(ab->first) && is_diff_expr(ab->second);
  if (auto ab = R().match_mul(t)) return is_diff_expr(ab->first) && is_diff_expr(ab->second);
  if (auto ab = R().match_pow(t)) return is_diff_expr(ab->first) && match_real_lit(ab->second).has_value();
  if (auto u = R().match_neg(t)) return is_diff_expr(*u);
  if (auto u = R().match_inv(t)) return is_diff_expr(*u);
  for (std::string_view fn : kFunctions) {
    if (auto u = R().match_unary(t, fn)) return is_diff_expr(*u);
  }
  return false;
}

std::optional<Term> diff(const Term& t) {
  if (!is_diff_expr(t)) return std::nullopt;
  return simplify(derive(t));
}

Term simplify(const Term& t) {
  Term cur = t;
  while (true) {
    Term next = simplify_once(cur);
    if (next == cur) return cur;
    cur = next;
  }
}

RealResult eval_real(const Term& t, double a) {
  if (!is_diff_expr(t)) throw std::invalid_argument("not a differentiable expression");
  return eval(t, a);
}

RealResult deriv_numeric(const Term& t, double a) {
  if (!is_diff_expr(t)) throw std::invalid_argument("not a differentiable expression");
  const auto fa = eval(t, a);
  if (!fa) return std::nullopt;
  constexpr double kSteps[] = {1e-3, 1e-4, 1e-5};
  double central[3], jump[3];
  for (int i = 0; i < 3; ++i) {
    const double h = kSteps[i];
    const auto up = eval(t, a + h);
    const auto down = eval(t, a - h);
    if (!up || !down) return std::nullopt;
    central[i] = (*up - *down) / (2 * h);
    jump[i] = (*up - 2 * *fa + *down) / h;  // forward minus backward quotient
  }
  for (int i = 0; i + 1 < 3; ++i) {
    const double gap = std::abs(central[i] - central[i + 1]);
    const double scale = std::max(std::abs(central[i]), std::abs(central[i + 1]));
    if (gap > 1e-3 * scale && gap > 1e-12) return std::nullopt;
  }
  // One-sided slopes must meet; a corner or cusp keeps them apart.
  if (std::abs(jump[2]) > 0.5 * std::abs(jump[1]) + 1e-6 * (1 + std::abs(*fa))) return std::nullopt;
  return finite(central[1] + (central[1] - central[0]) / 99.0);
}

DiffCheckReport check_spec_diff(const Term& t, const std::vector<double>& points) {
  DiffCheckReport report;
  const auto d = diff(t);
  if (!d) throw std::invalid_argument("not a differentiable expression");
  for (double a : points) {
    const auto num = deriv_numeric(t, a);
    if (!num) {
      ++report.vacuous;
      continue;
    }
    ++report.checked;
    const auto sym = eval(*d, a);
    if (!sym || std::abs(*sym - *num) > std::max(1e-4, 1e-4 * std::abs(*num))) {
      report.violations.push_back({a, *num, sym});
    }
  }
  return report;
}

std::vector<DomainPoint> domain_sample(const Term& t, double lo, double hi, int n) {
  if (!(lo < hi) || n < 2) throw std::invalid_argument("domain_sample needs lo < hi and n >= 2");
  if (!is_diff_expr(t)) throw std::invalid_argument("not a differentiable expression");
  std::vector<DomainPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    out.push_back({a, eval(t, a) ? Definedness::Defined : Definedness::Undefined});
  }
  return out;
}

}  // namespace sbcas
