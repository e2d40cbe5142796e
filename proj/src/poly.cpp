#include "sbcas/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbcas {

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const BigRat& c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat& c, std::size_t k) {
  std::vector<BigRat> cs(k + 1, BigRat(0));
  cs[k] = c;
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigRat> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
  return Poly(std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRat> cs(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(cs));
}

Poly Poly::operator-() const {
  std::vector<BigRat> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(-c);
  return Poly(std::move(cs));
}

Poly Poly::scale(const BigRat& c) const {
  std::vector<BigRat> cs;
  cs.reserve(coeffs_.size());
  for (const auto& k : coeffs_) cs.push_back(k * c);
  return Poly(std::move(cs));
}

Poly Poly::pow(unsigned long e) const {
  Poly result = constant(BigRat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(inv(lead()));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigRat& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const BigRat mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (i == 0 || !(mag == BigRat(1))) mono = mag.to_string();
    if (i > 0) {
      if (!mono.empty()) mono += "*";
      mono += "x";
      if (i > 1) mono += "^" + std::to_string(i);
    }
    out += mono;
  }
  return out;
}

PolyDivMod divmod(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < d.degree()) return {Poly(), p};
  std::vector<BigRat> rem = p.coeffs();
  const std::size_t dn = d.coeffs().size();
  std::vector<BigRat> quot(rem.size() - dn + 1, BigRat(0));
  const BigRat lead_inv = inv(d.lead());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRat q = rem[k + dn - 1] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * d.coeffs()[j];
  }
  rem.resize(dn - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly exact_div(const Poly& p, const Poly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
  return q;
}

BigRat eval_at(const Poly& p, const BigRat& a) {
  BigRat acc(0);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + p.coeffs()[i];
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<BigRat> cs;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) cs.push_back(p.coeffs()[i] * BigRat(static_cast<long>(i)));
  return Poly(std::move(cs));
}

std::vector<BigInt> primitive_integer_coeffs(const Poly& p) {
  if (p.is_zero()) return {};
  BigInt l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<BigInt> ints;
  ints.reserve(p.coeffs().size());
  BigInt g(0);
  for (const auto& c : p.coeffs()) {
    BigInt v = c.num() * (divmod(l, c.den()).quot);
    g = gcd(g, v);
    ints.push_back(std::move(v));
  }
  if (ints.back().sign() < 0) g = -g;
  for (auto& v : ints) v = divmod(v, g).quot;
  return ints;
}

namespace {

int sign_at(const Poly& p, const BigRat& a) { return eval_at(p, a).sign(); }

BigInt floor_of(const BigRat& a) { return divmod(a.num(), a.den()).quot; }

// The rational with the smallest denominator in [lo, hi], lo <= hi.
BigRat simplest_between(const BigRat& lo, const BigRat& hi) {
  const BigInt n = floor_of(lo);
  if (BigRat(n) == lo) return lo;
  if (BigRat(n + BigInt(1)) <= hi) return BigRat(n + BigInt(1));
  const BigRat frac = simplest_between(inv(hi - BigRat(n)), inv(lo - BigRat(n)));
  return BigRat(n) + inv(frac);
}

// Sturm chain f, f', -rem(...), ..., each scaled by a positive constant.
std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, derivative(f)};
  while (chain.back().degree() > 0) {
    const Poly r = divmod(chain[chain.size() - 2], chain.back()).rem;
    if (r.is_zero()) break;
    chain.push_back((-r).scale(inv(abs(r.lead()))));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const BigRat& a) {
  int changes = 0, last = 0;
  for (const Poly& p : chain) {
    const int s = sign_at(p, a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots of a squarefree integer polynomial with nonzero constant term.
// Real roots are isolated exactly; an interval narrower than 1/lead^2 holds at
// most one rational whose denominator divides lead, and that rational is then
// the simplest one in the interval.
std::vector<BigRat> squarefree_rational_roots(const std::vector<BigInt>& s) {
  std::vector<BigRat> roots;
  const std::size_t n = s.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(BigRat(-s[0], s[1]));
    return roots;
  }
  std::vector<BigRat> cs(s.begin(), s.end());
  const Poly f(std::move(cs));
  const auto chain = sturm_chain(f);
  const BigRat lead_sq = BigRat(s[n] * s[n]);

  BigRat bound(0);
  for (std::size_t i = 0; i < n; ++i) {
    const BigRat r = abs(BigRat(s[i], s[n]));
    if (bound < r) bound = r;
  }
  bound = bound + BigRat(1);

  auto refine = [&](BigRat lo, BigRat hi) {
    // Exactly one root in (lo, hi].
    if (sign_at(f, hi) == 0) {
      roots.push_back(hi);
      return;
    }
    const int s_lo = sign_at(f, lo);
    while ((hi - lo) * lead_sq >= BigRat(1)) {
      const BigRat mid = (lo + hi) / BigRat(2);
      const int s_mid = sign_at(f, mid);
      if (s_mid == 0) {
        roots.push_back(mid);
        return;
      }
      (s_mid == s_lo ? lo : hi) = mid;
    }
    const BigRat c = simplest_between(lo, hi);
    if (sign_at(f, c) == 0) roots.push_back(c);
  };

  auto isolate = [&](auto&& self, const BigRat& lo, const BigRat& hi, int v_lo, int v_hi) -> void {
    const int k = v_lo - v_hi;
    if (k <= 0) return;
    if (k == 1) {
      refine(lo, hi);
      return;
    }
    const BigRat mid = (lo + hi) / BigRat(2);
    const int v_mid = sign_changes(chain, mid);
    self(self, lo, mid, v_lo, v_mid);
    self(self, mid, hi, v_mid, v_hi);
  };
  const BigRat lo = -bound;
  isolate(isolate, lo, bound, sign_changes(chain, lo), sign_changes(chain, bound));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<RationalRoot> out;
  if (p.degree() == 0) return out;

  std::vector<BigRat> cs = p.coeffs();
  unsigned zero_mult = 0;
  while (cs.front().is_zero()) {
    cs.erase(cs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({BigRat(0), zero_mult});
  Poly f(std::move(cs));

  if (f.degree() >= 1) {
    const Poly sqfree = exact_div(f, gcd(f, derivative(f)));
    for (const BigRat& r : squarefree_rational_roots(primitive_integer_coeffs(sqfree))) {
      const Poly lin(std::vector<BigRat>{-r, BigRat(1)});
      unsigned m = 0;
      Poly g = f;
      while (true) {
        auto [q, rem] = divmod(g, lin);
        if (!rem.is_zero()) break;
        g = std::move(q);
        ++m;
      }
      out.push_back({r, m});
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.root < b.root; });
  return out;
}

Poly linear_part(const Poly& p) {
  Poly acc = Poly::constant(BigRat(1));
  for (const auto& [r, m] : rational_roots(p)) {
    acc = acc * Poly(std::vector<BigRat>{-r, BigRat(1)}).pow(m);
  }
  return acc;
}

}  // namespace sbcas
