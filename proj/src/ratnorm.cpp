#include "sbcas/ratnorm.hpp"

#include <stdexcept>

namespace sbcas {

namespace {

const Ops& Q() { return rat_ops(); }

void require_rat_expr(const Term& t) {
  if (!is_rat_expr(t)) throw std::invalid_argument("not a rational expression");
}

// Unreduced numerator/denominator pair.
struct Flat {
  Poly num;
  Poly den;
};

// Fraction arithmetic without cancellation. Records the numerator of every
// inverted operand; fails when one of them is the zero polynomial.
std::optional<Flat> flatten(const Term& t, std::vector<Poly>* inverted) {
  if (Q().is_var(t)) return Flat{Poly::x(), Poly::constant(BigRat(1))};
  if (const auto* lit = t.get<RatLit>()) return Flat{Poly::constant(lit->value), Poly::constant(BigRat(1))};
  if (auto ab = Q().match_add(t)) {
    auto a = flatten(ab->first, inverted);
    if (!a) return std::nullopt;
    auto b = flatten(ab->second, inverted);
    if (!b) return std::nullopt;
    return Flat{a->num * b->den + b->num * a->den, a->den * b->den};
  }
  if (auto ab = Q().match_mul(t)) {
    auto a = flatten(ab->first, inverted);
    if (!a) return std::nullopt;
    auto b = flatten(ab->second, inverted);
    if (!b) return std::nullopt;
    return Flat{a->num * b->num, a->den * b->den};
  }
  if (auto u = Q().match_neg(t)) {
    auto a = flatten(*u, inverted);
    if (!a) return std::nullopt;
    return Flat{-a->num, a->den};
  }
  if (auto u = Q().match_inv(t)) {
    auto a = flatten(*u, inverted);
    if (!a) return std::nullopt;
    if (inverted) inverted->push_back(a->num);
    if (a->num.is_zero()) return std::nullopt;
    return Flat{a->den, a->num};
  }
  throw std::invalid_argument("not a rational expression");
}

std::optional<CanonicalFraction> value_in_f(const Term& t) {
  if (Q().is_var(t)) return CanonicalFraction::x();
  if (const auto* lit = t.get<RatLit>()) return CanonicalFraction(Poly::constant(lit->value));
  if (auto ab = Q().match_add(t)) {
    auto a = value_in_f(ab->first);
    if (!a) return std::nullopt;
    auto b = value_in_f(ab->second);
    if (!b) return std::nullopt;
    return *a + *b;
  }
  if (auto ab = Q().match_mul(t)) {
    auto a = value_in_f(ab->first);
    if (!a) return std::nullopt;
    auto b = value_in_f(ab->second);
    if (!b) return std::nullopt;
    return *a * *b;
  }
  if (auto u = Q().match_neg(t)) {
    auto a = value_in_f(*u);
    if (!a) return std::nullopt;
    return -*a;
  }
  if (auto u = Q().match_inv(t)) {
    auto a = value_in_f(*u);
    if (!a || a->is_zero()) return std::nullopt;
    return a->inverse();
  }
  throw std::invalid_argument("not a rational expression");
}

Term rat_lit(const BigRat& c) { return Term::rat_lit(c); }

// x^k as the left-nested product ((x * x) * x) ...
Term x_power(std::size_t k) {
  Term acc = Q().var();
  for (std::size_t i = 1; i < k; ++i) acc = Q().mul(acc, Q().var());
  return acc;
}

// The polynomial rendered by t, when t is exactly poly_to_term of it.
std::optional<Poly> as_normal_poly(const Term& t) {
  if (!is_rat_expr(t)) return std::nullopt;
  auto v = value_in_f(t);
  if (!v || !v->is_polynomial()) return std::nullopt;
  if (!(poly_to_term(v->num()) == t)) return std::nullopt;
  return v->num();
}

}  // namespace

bool is_rat_expr(const Term& t) {
  if (Q().is_var(t) || t.is<RatLit>()) return true;
  if (auto ab = Q().match_add(t)) return is_rat_expr(ab->first) && is_rat_expr(ab->second);
  if (auto ab = Q().match_mul(t)) return is_rat_expr(ab->first) && is_rat_expr(ab->second);
  if (auto u = Q().match_neg(t)) return is_rat_expr(*u);
  if (auto u = Q().match_inv(t)) return is_rat_expr(*u);
  return false;
}

bool is_rat_fun(const Term& t) {
  const auto* l = t.get<Lambda>();
  return l && l->var == "x" && l->var_type == SemType::rational() && is_rat_expr(l->body);
}

std::optional<CanonicalFraction> val_in_f(const Term& t) {
  require_rat_expr(t);
  return value_in_f(t);
}

std::optional<BigRat> eval_rat_at(const Term& t, const BigRat& a) {
  if (Q().is_var(t)) return a;
  if (const auto* lit = t.get<RatLit>()) return lit->value;
  if (auto ab = Q().match_add(t)) {
    auto l = eval_rat_at(ab->first, a);
    if (!l) return std::nullopt;
    auto r = eval_rat_at(ab->second, a);
    if (!r) return std::nullopt;
    return *l + *r;
  }
  if (auto ab = Q().match_mul(t)) {
    auto l = eval_rat_at(ab->first, a);
    if (!l) return std::nullopt;
    auto r = eval_rat_at(ab->second, a);
    if (!r) return std::nullopt;
    return *l * *r;
  }
  if (auto u = Q().match_neg(t)) {
    auto v = eval_rat_at(*u, a);
    if (!v) return std::nullopt;
    return -*v;
  }
  if (auto u = Q().match_inv(t)) {
    auto v = eval_rat_at(*u, a);
    if (!v || v->is_zero()) return std::nullopt;
    return inv(*v);
  }
  throw std::invalid_argument("not a rational expression");
}

std::optional<Term> body(const Term& t) {
  if (const auto* l = t.get<Lambda>()) return l->body;
  return std::nullopt;
}

Term poly_to_term(const Poly& p) {
  if (p.is_zero()) return rat_lit(BigRat(0));
  std::optional<Term> acc;
  const auto& cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (cs[k].is_zero()) continue;
    const BigRat mag = abs(cs[k]);
    Term mono = k == 0 ? rat_lit(mag)
                       : (mag == BigRat(1) ? x_power(k) : Q().mul(rat_lit(mag), x_power(k)));
    if (!acc) {
      acc = cs[k].sign() < 0 ? Q().neg(mono) : mono;
    } else {
      acc = cs[k].sign() < 0 ? Q().sub(*acc, mono) : Q().add(*acc, mono);
    }
  }
  return *acc;
}

Term frac_to_term(const CanonicalFraction& c) {
  if (c.is_polynomial()) return poly_to_term(c.num());
  return Q().div(poly_to_term(c.num()), poly_to_term(c.den()));
}

Term undefined_normal_form() { return Q().div(rat_lit(BigRat(1)), rat_lit(BigRat(0))); }

bool is_norm(const Term& t) {
  if (t == undefined_normal_form()) return true;
  if (!is_rat_expr(t)) return false;
  auto v = value_in_f(t);
  return v && frac_to_term(*v) == t;
}

bool is_quasinorm(const Term& t) {
  if (t == undefined_normal_form()) return true;
  if (!is_rat_expr(t)) return false;
  std::optional<Poly> p;
  Poly q = Poly::constant(BigRat(1));
  if (auto pq = Q().match_mul(t)) {
    if (auto den = Q().match_inv(pq->second)) {
      p = as_normal_poly(pq->first);
      auto qq = as_normal_poly(*den);
      if (!p || !qq || !qq->is_monic() || qq->is_one()) return false;
      q = *qq;
    }
  }
  if (!p) {
    p = as_normal_poly(t);
    if (!p) return false;
  }
  const Poly g = gcd(*p, q);
  return linear_part(g) == g;
}

std::optional<Term> norm_rat_expr(const Term& t) {
  if (!is_rat_expr(t)) return std::nullopt;
  auto v = value_in_f(t);
  if (!v) return undefined_normal_form();
  return frac_to_term(*v);
}

Term quasinorm_rat_expr(const Term& t) {
  require_rat_expr(t);
  std::vector<Poly> inverted;
  auto flat = flatten(t, &inverted);
  if (!flat) return undefined_normal_form();

  // Cancel only the part of the gcd that has no rational roots.
  const Poly g = gcd(flat->num, flat->den);
  const Poly h = exact_div(g, linear_part(g));
  Poly p = exact_div(flat->num, h);
  Poly q = exact_div(flat->den, h);
  const BigRat lc_inv = inv(q.lead());
  p = p.scale(lc_inv);
  q = q.scale(lc_inv);

  // A nested inversion such as 1/(1/x) flattens to x/1; put back a linear
  // factor for every rational point where some inverted subterm vanishes.
  for (const Poly& n : inverted) {
    for (const auto& root : rational_roots(n)) {
      if (!eval_at(q, root.root).is_zero()) {
        const Poly lin(std::vector<BigRat>{-root.root, BigRat(1)});
        p = p * lin;
        q = q * lin;
      }
    }
  }

  if (q.is_one()) return poly_to_term(p);
  return Q().div(poly_to_term(p), poly_to_term(q));
}

std::optional<Term> norm_rat_fun(const Term& t) {
  if (!is_rat_fun(t)) return std::nullopt;
  const auto* l = t.get<Lambda>();
  return Term::lambda(l->var, l->var_type, quasinorm_rat_expr(l->body));
}

bool fn_quasi_equal_at(const Term& f, const Term& g, const BigRat& a) {
  if (!is_rat_fun(f) || !is_rat_fun(g)) throw std::invalid_argument("not a rational function");
  const auto fa = eval_rat_at(f.get<Lambda>()->body, a);
  const auto ga = eval_rat_at(g.get<Lambda>()->body, a);
  if (!fa || !ga) return !fa && !ga;
  return *fa == *ga;
}

std::vector<Poly> inverted_numerators(const Term& t) {
  require_rat_expr(t);
  std::vector<Poly> out;
  auto visit = [&](auto&& self, const Term& s) -> void {
    if (auto ab = Q().match_add(s)) {
      self(self, ab->first);
      self(self, ab->second);
    } else if (auto ab2 = Q().match_mul(s)) {
      self(self, ab2->first);
      self(self, ab2->second);
    } else if (auto u = Q().match_neg(s)) {
      self(self, *u);
    } else if (auto v = Q().match_inv(s)) {
      self(self, *v);
      if (auto fl = flatten(*v, nullptr); fl && !fl->num.is_zero()) out.push_back(fl->num);
    }
  };
  visit(visit, t);
  return out;
}

}  // namespace sbcas
