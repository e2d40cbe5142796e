#include "sbcas/harness.hpp"

#include "sbcas/diff.hpp"
#include "sbcas/eval.hpp"
#include "sbcas/factor.hpp"
#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sbcas {

// ---------------------------------------------------------------------------
// Oracles. Deliberately naive and independent of the library's normalizers.

namespace {

const Ops& Q() { return rat_ops(); }
const Ops& R() { return real_ops(); }

struct OracleFrac {
  Poly num;
  Poly den;
};

// Fraction arithmetic with no cancellation at all.
std::optional<OracleFrac> oracle_flatten(const Term& t) {
  const Poly one = Poly::constant(BigRat(1));
  if (Q().is_var(t)) return OracleFrac{Poly::x(), one};
  if (const auto* lit = t.get<RatLit>()) return OracleFrac{Poly::constant(lit->value), one};
  if (auto ab = Q().match_add(t)) {
    auto a = oracle_flatten(ab->first), b = oracle_flatten(ab->second);
    if (!a || !b) return std::nullopt;
    return OracleFrac{a->num * b->den + b->num * a->den, a->den * b->den};
  }
  if (auto ab = Q().match_mul(t)) {
    auto a = oracle_flatten(ab->first), b = oracle_flatten(ab->second);
    if (!a || !b) return std::nullopt;
    return OracleFrac{a->num * b->num, a->den * b->den};
  }
  if (auto u = Q().match_neg(t)) {
    auto a = oracle_flatten(*u);
    if (!a) return std::nullopt;
    return OracleFrac{-a->num, a->den};
  }
  if (auto u = Q().match_inv(t)) {
    auto a = oracle_flatten(*u);
    if (!a || a->num.is_zero()) return std::nullopt;
    return OracleFrac{a->den, a->num};
  }
  throw std::invalid_argument("oracle: not a rational expression");
}

// Cross-multiplication: r0/s0 = r1/s1 iff r0 s1 = r1 s0; both undefined counts as equal.
bool oracle_same_value(const Term& a, const Term& b) {
  auto fa = oracle_flatten(a), fb = oracle_flatten(b);
  if (!fa || !fb) return !fa && !fb;
  return fa->num * fb->den == fb->num * fa->den;
}

std::optional<BigRat> oracle_eval_at(const Term& t, const BigRat& a) {
  if (Q().is_var(t)) return a;
  if (const auto* lit = t.get<RatLit>()) return lit->value;
  if (auto ab = Q().match_add(t)) {
    auto l = oracle_eval_at(ab->first, a), r = oracle_eval_at(ab->second, a);
    if (!l || !r) return std::nullopt;
    return *l + *r;
  }
  if (auto ab = Q().match_mul(t)) {
    auto l = oracle_eval_at(ab->first, a), r = oracle_eval_at(ab->second, a);
    if (!l || !r) return std::nullopt;
    return *l * *r;
  }
  if (auto u = Q().match_neg(t)) {
    auto v = oracle_eval_at(*u, a);
    if (!v) return std::nullopt;
    return -*v;
  }
  if (auto u = Q().match_inv(t)) {
    auto v = oracle_eval_at(*u, a);
    if (!v || v->is_zero()) return std::nullopt;
    return BigRat(1) / *v;
  }
  throw std::invalid_argument("oracle: not a rational expression");
}

// Prime powers of n by trial division, for 0 < n <= 10^10.
std::vector<std::pair<std::uint64_t, unsigned long>> trial_division(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned long>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool oracle_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.raw().get_mpz_t(), 40) > 0; }

constexpr double kZeroGuard = 1e-3;

}  // namespace

// ---------------------------------------------------------------------------
// Generators

void GenConfig::validate() const {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
  if (cases < 1) throw std::invalid_argument("cases must be at least 1");
  if (coeff_bound < 1) throw std::invalid_argument("coeff_bound must be at least 1");
}

TermGen::TermGen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) { cfg.validate(); }

int TermGen::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool TermGen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

BigRat TermGen::small_rational() {
  const int b = cfg_.coeff_bound;
  const int n = uniform(-b, b);
  if (coin(0.7)) return BigRat(n);
  return BigRat(BigInt(n), BigInt(uniform(2, std::max(2, b))));
}

Term TermGen::numeral() {
  const int digits = uniform(1, 15);
  std::string s;
  s.push_back(static_cast<char>('0' + (digits == 1 ? uniform(0, 9) : uniform(1, 9))));
  for (int i = 1; i < digits; ++i) s.push_back(static_cast<char>('0' + uniform(0, 9)));
  return Term::int_lit(BigInt::parse(s));
}

Term TermGen::non_numeral() {
  const Ops& z = int_ops();
  auto num = [&] { return Term::int_lit(BigInt(uniform(0, 1000))); };
  switch (uniform(0, 10)) {
    case 0: return Term::int_lit(BigInt(-uniform(1, 1000000)));
    case 1: return z.var("x");
    case 2: return z.add(num(), num());
    case 3: return Term::rat_lit(BigRat(uniform(0, 1000)));
    case 4: return Term::lambda("x", SemType::integer(), num());
    case 5: return quote(num());
    case 6: return z.neg(num());
    case 7: return z.mul(num(), num());
    case 8: return z.pow(num(), Term::int_lit(BigInt(uniform(0, 4))));
    case 9: return real_lit(BigRat(uniform(0, 1000)));
    default: return Term::constant(std::string(sym::kAdd), SemType::arrow(SemType::integer(), SemType::integer()));
  }
}

Term TermGen::rat_leaf() {
  if (coin(0.5)) return Q().var();
  return Term::rat_lit(small_rational());
}

Term TermGen::rat_expr_at(int depth) {
  const double p_leaf = depth >= cfg_.max_depth ? 1.0 : 0.1 + 0.9 * depth / cfg_.max_depth;
  if (depth > 0 && coin(p_leaf)) return rat_leaf();
  if (depth >= cfg_.max_depth) return rat_leaf();
  const int k = uniform(0, 9);
  if (k <= 2) return Q().add(rat_expr_at(depth + 1), rat_expr_at(depth + 1));
  if (k <= 5) return Q().mul(rat_expr_at(depth + 1), rat_expr_at(depth + 1));
  if (k == 6) return Q().sub(rat_expr_at(depth + 1), rat_expr_at(depth + 1));
  if (k == 7) return Q().neg(rat_expr_at(depth + 1));
  // Inversions; about a third get an operand with a rational root so that
  // singular points and undefined values come up often.
  const int j = uniform(0, 19);
  if (j == 0) return Q().inv(Q().sub(Q().var(), Q().var()));
  if (j <= 4) return Q().inv(Q().sub(Q().var(), Term::rat_lit(small_rational())));
  if (j <= 6) {
    return Q().inv(Q().mul(Q().sub(Q().var(), Term::rat_lit(small_rational())),
                           rat_expr_at(depth + 1)));
  }
  return Q().inv(rat_expr_at(depth + 1));
}

Term TermGen::rat_expr() { return rat_expr_at(0); }

Term TermGen::rat_fun() { return Term::lambda("x", SemType::rational(), rat_expr()); }

Term TermGen::non_rat_expr() {
  switch (uniform(0, 8)) {
    case 0: return Q().add(rat_expr(), Q().var("y"));
    case 1: return Q().pow(Q().var(), Term::rat_lit(BigRat(2)));
    case 2: return int_term().term;
    case 3: return diff_expr();
    case 4: return rat_fun();
    case 5: return quote(rat_expr());
    case 6: return Q().mul(rat_expr(), R().var());
    case 7: return frac_ops().add(Term::constant(std::string(sym::kIndet), SemType::fraction()),
                                  Term::constant(std::string(sym::kIndet), SemType::fraction()));
    default: return Term::int_lit(BigInt(uniform(0, 100)));
  }
}

Term TermGen::non_rat_fun() {
  switch (uniform(0, 5)) {
    case 0: return rat_expr();
    case 1: return Term::lambda("y", SemType::rational(), rat_expr());
    case 2: return Term::lambda("x", SemType::real(), rat_expr());
    case 3: return Term::lambda("x", SemType::rational(), non_rat_expr());
    case 4: return quote(rat_fun());
    default: return Term::lambda("x", SemType::rational(), Term::lambda("x", SemType::rational(), rat_expr()));
  }
}

std::vector<double> diff_sample_grid() {
  std::vector<double> out;
  for (int i = 0; i < 25; ++i) out.push_back(-3.0 + 0.25 * i);
  return out;
}

namespace {

const std::vector<BigRat>& diff_exponents() {
  static const std::vector<BigRat> exps = {BigRat(2),          BigRat(3),          BigRat(-1),
                                           BigRat(-2),         BigRat(1, 2),       BigRat(1, 3),
                                           BigRat(2, 3),       BigRat(3, 2),       BigRat(-1, 2),
                                           BigRat(-1, 3),      BigRat(5, 3)};
  return exps;
}

// Subterm values outside [kTiny, kHuge] (apart from exact zero) make double
// evaluation of f or of its derivative lose the variable or overflow.
constexpr double kHuge = 1e6;
constexpr double kTiny = 1e-6;

bool badly_scaled_on_grid(const Term& u) {
  for (double a : diff_sample_grid()) {
    auto v = eval_real(u, a);
    if (v && (std::abs(*v) > kHuge || (*v != 0 && std::abs(*v) < kTiny))) return true;
  }
  return false;
}

// True when u is defined and within kZeroGuard of zero at some grid point.
bool near_zero_on_grid(const Term& u) {
  for (double a : diff_sample_grid()) {
    auto v = eval_real(u, a);
    if (v && std::abs(*v) < kZeroGuard) return true;
  }
  return false;
}

}  // namespace

Term TermGen::diff_expr_at(int depth) {
  for (int tries = 0; tries < 20; ++tries) {
    Term t = diff_node_at(depth);
    if (!badly_scaled_on_grid(t)) return t;
  }
  return R().var();
}

Term TermGen::diff_node_at(int depth) {
  const double p_leaf = depth >= cfg_.max_depth ? 1.0 : 0.1 + 0.9 * depth / cfg_.max_depth;
  if ((depth > 0 && coin(p_leaf)) || depth >= cfg_.max_depth) {
    if (coin(0.55)) return R().var();
    BigRat c = small_rational();
    if (c.is_zero()) c = BigRat(1);
    return real_lit(c);
  }
  switch (uniform(0, 11)) {
    case 0:
    case 1: return R().add(diff_expr_at(depth + 1), diff_expr_at(depth + 1));
    case 2:
    case 3: return R().mul(diff_expr_at(depth + 1), diff_expr_at(depth + 1));
    case 4: return R().sub(diff_expr_at(depth + 1), diff_expr_at(depth + 1));
    case 5: return R().neg(diff_expr_at(depth + 1));
    case 6: return R().inv(diff_expr_at(depth + 1));
    case 7: {
      const auto& exps = diff_exponents();
      const BigRat c = exps[static_cast<std::size_t>(uniform(0, static_cast<int>(exps.size()) - 1))];
      Term u = diff_expr_at(depth + 1);
      // A fractional power is not differentiable where its operand vanishes,
      // yet the numeric oracle can miss that; keep such points off the grid.
      if (!c.is_integer()) {
        for (int tries = 0; near_zero_on_grid(u); ++tries) {
          u = tries < 20 ? diff_expr_at(depth + 1) : R().add(R().mul(R().var(), R().var()), real_lit(BigRat(1)));
        }
      }
      return R().pow(u, real_lit(c));
    }
    default: {
      static constexpr std::string_view kFns[] = {sym::kExp, sym::kLn, sym::kSin, sym::kCos, sym::kTan};
      return R().unary(kFns[uniform(0, 4)], diff_expr_at(depth + 1));
    }
  }
}

Term TermGen::diff_expr() { return diff_expr_at(0); }

Term TermGen::non_diff_expr() {
  switch (uniform(0, 5)) {
    case 0: return rat_expr();
    case 1: return R().pow(R().var(), R().var());
    case 2: return Term::lambda("x", SemType::real(), diff_expr());
    case 3: return R().add(diff_expr(), R().var("y"));
    case 4: return quote(diff_expr());
    default: return R().unary(sym::kSin, Q().var());
  }
}

Valued<BigInt> TermGen::int_term_at(int depth) {
  const Ops& z = int_ops();
  const double p_leaf = depth >= cfg_.max_depth ? 1.0 : 0.15 + 0.85 * depth / cfg_.max_depth;
  if (depth >= cfg_.max_depth || coin(p_leaf)) {
    const BigInt v(uniform(-cfg_.coeff_bound, cfg_.coeff_bound));
    return {Term::int_lit(v), v};
  }
  switch (uniform(0, 4)) {
    case 0: {
      auto a = int_term_at(depth + 1), b = int_term_at(depth + 1);
      return {z.add(a.term, b.term), a.value + b.value};
    }
    case 1: {
      auto a = int_term_at(depth + 1), b = int_term_at(depth + 1);
      return {z.mul(a.term, b.term), a.value * b.value};
    }
    case 2: {
      auto a = int_term_at(depth + 1);
      return {z.neg(a.term), -a.value};
    }
    case 3: {
      auto a = int_term_at(depth + 1);
      const unsigned long e = static_cast<unsigned long>(uniform(0, 3));
      return {z.pow(a.term, Term::int_lit(BigInt(static_cast<long>(e)))), pow(a.value, e)};
    }
    default: {
      auto a = int_term_at(depth + 1), b = int_term_at(depth + 1);
      return {z.sub(a.term, b.term), a.value - b.value};
    }
  }
}

Valued<BigInt> TermGen::int_term() { return int_term_at(0); }

std::optional<Valued<BigRat>> TermGen::rat_term_at(int depth) {
  const double p_leaf = depth >= cfg_.max_depth ? 1.0 : 0.15 + 0.85 * depth / cfg_.max_depth;
  if (depth >= cfg_.max_depth || coin(p_leaf)) {
    const BigRat v = small_rational();
    return Valued<BigRat>{Term::rat_lit(v), v};
  }
  const int k = uniform(0, 3);
  auto a = rat_term_at(depth + 1);
  if (!a) return std::nullopt;
  if (k == 2) return Valued<BigRat>{Q().neg(a->term), -a->value};
  if (k == 3) {
    if (a->value.is_zero()) return std::nullopt;
    return Valued<BigRat>{Q().inv(a->term), inv(a->value)};
  }
  auto b = rat_term_at(depth + 1);
  if (!b) return std::nullopt;
  if (k == 0) return Valued<BigRat>{Q().add(a->term, b->term), a->value + b->value};
  return Valued<BigRat>{Q().mul(a->term, b->term), a->value * b->value};
}

Valued<BigRat> TermGen::rat_term() {
  while (true) {
    if (auto v = rat_term_at(0)) return *v;
  }
}

namespace {

// Rebuild t with f applied to one randomly chosen node (in preorder).
Term rewrite_at(const Term& t, std::size_t& index, const std::function<std::optional<Term>(const Term&)>& f) {
  if (index == 0) {
    --index;
    if (auto r = f(t)) return *r;
    return t;
  }
  --index;
  if (auto ab = Q().match_add(t)) {
    Term a = rewrite_at(ab->first, index, f);
    return Q().add(a, rewrite_at(ab->second, index, f));
  }
  if (auto ab = Q().match_mul(t)) {
    Term a = rewrite_at(ab->first, index, f);
    return Q().mul(a, rewrite_at(ab->second, index, f));
  }
  if (auto u = Q().match_neg(t)) return Q().neg(rewrite_at(*u, index, f));
  if (auto u = Q().match_inv(t)) return Q().inv(rewrite_at(*u, index, f));
  return t;
}

std::size_t op_count(const Term& t) {
  if (auto ab = Q().match_add(t)) return 1 + op_count(ab->first) + op_count(ab->second);
  if (auto ab = Q().match_mul(t)) return 1 + op_count(ab->first) + op_count(ab->second);
  if (auto u = Q().match_neg(t)) return 1 + op_count(*u);
  if (auto u = Q().match_inv(t)) return 1 + op_count(*u);
  return 1;
}

}  // namespace

Term TermGen::equal_variant(const Term& t) {
  Term cur = t;
  const int steps = uniform(1, 3);
  for (int i = 0; i < steps; ++i) {
    switch (uniform(0, 3)) {
      case 0: {  // commute somewhere
        std::size_t at = static_cast<std::size_t>(uniform(0, static_cast<int>(op_count(cur)) - 1));
        cur = rewrite_at(cur, at, [](const Term& s) -> std::optional<Term> {
          if (auto ab = Q().match_add(s)) return Q().add(ab->second, ab->first);
          if (auto ab = Q().match_mul(s)) return Q().mul(ab->second, ab->first);
          return std::nullopt;
        });
        break;
      }
      case 1: {  // distribute somewhere
        std::size_t at = static_cast<std::size_t>(uniform(0, static_cast<int>(op_count(cur)) - 1));
        cur = rewrite_at(cur, at, [](const Term& s) -> std::optional<Term> {
          auto ab = Q().match_mul(s);
          if (!ab) return std::nullopt;
          if (auto cd = Q().match_add(ab->second)) {
            return Q().add(Q().mul(ab->first, cd->first), Q().mul(ab->first, cd->second));
          }
          if (auto cd = Q().match_add(ab->first)) {
            return Q().add(Q().mul(cd->first, ab->second), Q().mul(cd->second, ab->second));
          }
          return std::nullopt;
        });
        break;
      }
      case 2: {  // times s/s, s a nonzero element of Q(x)
        Term s = rat_expr_at(cfg_.max_depth - 2);
        const auto fs = oracle_flatten(s);
        if (coin(0.5) || !fs || fs->num.is_zero()) s = Q().sub(Q().var(), Term::rat_lit(small_rational()));
        cur = Q().mul(cur, Q().div(s, s));
        break;
      }
      default: {  // plus s - s, s defined in Q(x)
        Term s = rat_expr_at(cfg_.max_depth - 2);
        if (!oracle_flatten(s)) s = Term::rat_lit(small_rational());
        cur = Q().add(cur, Q().sub(s, s));
        break;
      }
    }
  }
  return cur;
}

Term gen_numeral(const GenConfig& cfg) { return TermGen(cfg).numeral(); }
Term gen_rat_expr(const GenConfig& cfg) { return TermGen(cfg).rat_expr(); }
Term gen_rat_fun(const GenConfig& cfg) { return TermGen(cfg).rat_fun(); }
Term gen_diff_expr(const GenConfig& cfg) { return TermGen(cfg).diff_expr(); }

// ---------------------------------------------------------------------------
// Reports

void Report::expect_branch(const std::string& branch) {
  for (const auto& b : branches) {
    if (b.name == branch) return;
  }
  branches.push_back({branch, 0, 0, std::nullopt});
}

void Report::record(const std::string& branch, bool passed, const std::string& what) {
  expect_branch(branch);
  for (auto& b : branches) {
    if (b.name != branch) continue;
    ++b.hits;
    if (!passed) {
      ++b.failures;
      if (!b.first_counterexample) b.first_counterexample = what;
    }
    return;
  }
}

void Report::merge(const Report& other) {
  for (const auto& ob : other.branches) {
    expect_branch(ob.name);
    for (auto& b : branches) {
      if (b.name != ob.name) continue;
      b.hits += ob.hits;
      b.failures += ob.failures;
      if (!b.first_counterexample) b.first_counterexample = ob.first_counterexample;
    }
  }
  seconds += other.seconds;
}

long Report::failures() const {
  long n = 0;
  for (const auto& b : branches) n += b.failures;
  return n;
}

bool Report::ok() const {
  for (const auto& b : branches) {
    if (b.hits == 0 || b.failures > 0) return false;
  }
  return !branches.empty();
}

std::string Report::text() const {
  std::ostringstream out;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", seconds);
  out << "check " << suite << ": " << (ok() ? "PASS" : "FAIL") << " (" << secs << " s)\n";
  std::size_t width = 0;
  for (const auto& b : branches) width = std::max(width, b.name.size());
  for (const auto& b : branches) {
    out << "  " << b.name << std::string(width - b.name.size() + 2, ' ') << "hits " << b.hits
        << "  failures " << b.failures;
    if (b.hits == 0) out << "  (never reached)";
    out << "\n";
    if (b.first_counterexample) out << "    first counterexample: " << *b.first_counterexample << "\n";
  }
  return out.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["ok"] = ok();
  j["seconds"] = seconds;
  j["failures"] = failures();
  j["branches"] = nlohmann::json::array();
  for (const auto& b : branches) {
    nlohmann::json jb = {{"name", b.name}, {"hits", b.hits}, {"failures", b.failures}};
    jb["first_counterexample"] = b.first_counterexample ? nlohmann::json(*b.first_counterexample) : nlohmann::json();
    j["branches"].push_back(jb);
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// Contracts

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string show(const Term& t) { return print(t); }

std::string show(const std::optional<Term>& t) { return t ? print(*t) : "undefined"; }

// Value agreement against the oracles: trial division when small, otherwise
// an independent probable-prime test on each factor.
bool factor_matches_oracle(const BigInt& n, const PrimeFactorization& pf) {
  if (n.is_zero()) return pf.sign == 0 && pf.factors.empty();
  const BigInt m = abs(n);
  if (m <= BigInt(10000000000L)) {
    const auto expect = trial_division(static_cast<std::uint64_t>(m.to_long()));
    if (expect.size() != pf.factors.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i) {
      if (!(pf.factors[i].prime == BigInt(static_cast<long>(expect[i].first))) ||
          pf.factors[i].exponent != expect[i].second) {
        return false;
      }
    }
    return true;
  }
  BigInt prod(1);
  for (const auto& [p, e] : pf.factors) {
    if (!oracle_probable_prime(p)) return false;
    prod *= pow(p, e);
  }
  return prod == m;
}

void check_factor_case(Report& r, const Term& t) {
  const auto out = factor(t);
  if (!out) {
    r.record("numeral: prime decomposition", false, show(t) + " -> undefined");
    return;
  }
  r.record("numeral: prime decomposition", is_prime_decomp(*out), show(t) + " -> " + show(*out));
  const auto in_val = eval_as(quote(t), SemType::integer());
  const auto out_val = eval_as(quote(*out), SemType::integer());
  const bool same = in_val && out_val && std::get<BigInt>(*in_val) == std::get<BigInt>(*out_val);
  r.record("numeral: same value", same, show(t) + " -> " + show(*out));
  const BigInt n = t.get<IntLit>()->value;
  r.record("numeral: oracle agreement", factor_matches_oracle(n, factor_int(n)), show(t));
}

}  // namespace

Report check_spec_factor(const GenConfig& cfg) {
  Timer timer;
  TermGen gen(cfg);
  Report r;
  r.suite = "factor";
  for (const char* b : {"numeral: prime decomposition", "numeral: same value", "numeral: oracle agreement",
                        "non-numeral: undefined"}) {
    r.expect_branch(b);
  }
  for (long v : {0L, 1L, 2L, 12L, 97L, 1024L}) check_factor_case(r, Term::int_lit(BigInt(v)));
  for (int i = 0; i < cfg.cases; ++i) check_factor_case(r, gen.numeral());
  const int non = std::max(1, cfg.cases * 2 / 5);
  for (int i = 0; i < non; ++i) {
    const Term t = gen.non_numeral();
    const auto out = factor(t);
    r.record("non-numeral: undefined", !out && !is_numeral(t), show(t) + " -> " + show(out));
  }
  r.seconds = timer.seconds();
  return r;
}

namespace {

void check_norm_expr_case(Report& r, const Term& t) {
  const auto out = norm_rat_expr(t);
  if (!out) {
    r.record("ratexpr: normal form", false, show(t) + " -> undefined");
    return;
  }
  r.record("ratexpr: normal form", is_norm(*out), show(t) + " -> " + show(*out));

  const auto vin = val_in_f(t);
  const auto vout = val_in_f(*out);
  const bool quasi = (!vin && !vout) || (vin && vout && *vin == *vout);
  const bool oracle = oracle_same_value(t, *out) ||
                      (!oracle_flatten(t) && *out == undefined_normal_form());
  r.record("ratexpr: same value in Q(x)", quasi && oracle, show(t) + " -> " + show(*out));
  if (!vin) {
    r.record("ratexpr: undefined in Q(x) gives 1/0", *out == undefined_normal_form(),
             show(t) + " -> " + show(*out));
  }
  r.record("ratexpr: idempotent", norm_rat_expr(*out) == out, show(*out) + " -> " + show(norm_rat_expr(*out)));
}

void check_canonical_pair(Report& r, const Term& a, const Term& b) {
  const bool same = oracle_same_value(a, b);
  const bool same_nf = norm_rat_expr(a) == norm_rat_expr(b);
  r.record(same ? "canonical: equal values share a normal form" : "canonical: distinct values differ",
           same == same_nf, show(a) + "  vs  " + show(b));
}

}  // namespace

Report check_spec_norm_rat_expr(const GenConfig& cfg) {
  Timer timer;
  TermGen gen(cfg);
  Report r;
  r.suite = "norm-expr";
  for (const char* b : {"ratexpr: normal form", "ratexpr: same value in Q(x)", "ratexpr: undefined in Q(x) gives 1/0",
                        "ratexpr: idempotent", "canonical: equal values share a normal form",
                        "canonical: distinct values differ", "non-ratexpr: undefined", "known cases"}) {
    r.expect_branch(b);
  }

  const std::pair<const char*, const char*> known[] = {
      {"(x^4-1)/(x^2-1)", "x^2 + 1"}, {"x/x", "1"}, {"1/x - 1/x", "0"}, {"1/(x-x)", "1 / 0"}};
  for (const auto& [in, expect] : known) {
    const Term t = parse(in, Lang::RatExpr);
    check_norm_expr_case(r, t);
    const auto out = norm_rat_expr(t);
    r.record("known cases", out && print(*out) == expect, std::string(in) + " -> " + show(out));
  }

  for (int i = 0; i < cfg.cases; ++i) {
    const Term t = gen.rat_expr();
    check_norm_expr_case(r, t);
    check_canonical_pair(r, t, gen.equal_variant(t));
    check_canonical_pair(r, t, gen.rat_expr());
  }
  const int non = std::max(1, cfg.cases / 5);
  for (int i = 0; i < non; ++i) {
    const Term t = gen.non_rat_expr();
    const auto out = norm_rat_expr(t);
    r.record("non-ratexpr: undefined", !out && !is_rat_expr(t), show(t) + " -> " + show(out));
  }
  r.seconds = timer.seconds();
  return r;
}

namespace {

std::vector<BigRat> singular_points(const Term& body) {
  std::vector<BigRat> pts;
  for (const Poly& n : inverted_numerators(body)) {
    for (const auto& root : rational_roots(n)) pts.push_back(root.root);
  }
  return pts;
}

void check_norm_fun_case(Report& r, TermGen& gen, const Term& f) {
  const auto out = norm_rat_fun(f);
  if (!out) {
    r.record("ratfun: output is a rational function", false, show(f) + " -> undefined");
    return;
  }
  r.record("ratfun: output is a rational function", is_rat_fun(*out), show(f) + " -> " + show(*out));
  const Term in_body = *body(f);
  const Term out_body = *body(*out);
  r.record("ratfun: body is quasinormal", is_quasinorm(out_body), show(f) + " -> " + show(*out));

  std::vector<BigRat> pts = singular_points(in_body);
  const auto more = singular_points(out_body);
  pts.insert(pts.end(), more.begin(), more.end());
  const std::size_t singular = pts.size();
  for (int i = 0; i < 50; ++i) pts.push_back(gen.small_rational());

  bool all = true;
  std::string where;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto a = oracle_eval_at(in_body, pts[i]);
    const auto b = oracle_eval_at(out_body, pts[i]);
    const bool agree = (!a && !b) || (a && b && *a == *b);
    if (!agree && all) {
      all = false;
      where = " at x = " + pts[i].to_string();
    }
    if (i < singular && !a) {
      r.record("ratfun: singular point kept", !b, show(f) + " -> " + show(*out) + " at x = " + pts[i].to_string());
    }
  }
  r.record("ratfun: same partial function", all, show(f) + " -> " + show(*out) + where);
}

}  // namespace

Report check_spec_norm_rat_fun(const GenConfig& cfg) {
  Timer timer;
  TermGen gen(cfg);
  Report r;
  r.suite = "norm-fun";
  for (const char* b : {"ratfun: output is a rational function", "ratfun: body is quasinormal",
                        "ratfun: same partial function", "ratfun: singular point kept", "non-ratfun: undefined",
                        "known cases"}) {
    r.expect_branch(b);
  }

  const std::pair<const char*, const char*> known[] = {
      {"fun x -> x/x", "fun x -> x / x"},
      {"fun x -> (x^2+1)/(x^2+1)", "fun x -> 1"},
      {"fun x -> (x^4-1)/(x^2-1)", "fun x -> (x^4 - 1) / (x^2 - 1)"},
  };
  for (const auto& [in, expect] : known) {
    const Term f = parse(in, Lang::RatFun);
    check_norm_fun_case(r, gen, f);
    const auto out = norm_rat_fun(f);
    const bool exact = out && *out == parse(expect, Lang::RatFun);
    r.record("known cases", exact, std::string(in) + " -> " + show(out));
  }

  for (int i = 0; i < cfg.cases; ++i) check_norm_fun_case(r, gen, gen.rat_fun());
  const int non = std::max(1, cfg.cases / 5);
  for (int i = 0; i < non; ++i) {
    const Term t = gen.non_rat_fun();
    const auto out = norm_rat_fun(t);
    r.record("non-ratfun: undefined", !out && !is_rat_fun(t), show(t) + " -> " + show(out));
  }
  r.seconds = timer.seconds();
  return r;
}

namespace {

void check_diff_case(Report& r, const Term& t) {
  const auto d = diff(t);
  if (!d) {
    r.record("diffexpr: output in the language", false, show(t) + " -> undefined");
    return;
  }
  r.record("diffexpr: output in the language", is_diff_expr(*d), show(t) + " -> " + show(*d));
  const auto rep = sbcas::check_spec_diff(t, diff_sample_grid());
  std::string what = show(t) + " -> " + show(*d);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    char buf[128];
    std::snprintf(buf, sizeof buf, " at x = %.6g: numeric %.10g, symbolic %s", v.point, v.numeric,
                  v.symbolic ? std::to_string(*v.symbolic).c_str() : "undefined");
    what += buf;
  }
  if (rep.checked > 0) r.record("diffexpr: derivative agrees", rep.ok(), what);
}

}  // namespace

Report check_spec_diff(const GenConfig& cfg) {
  Timer timer;
  TermGen gen(cfg);
  Report r;
  r.suite = "diff";
  for (const char* b : {"diffexpr: output in the language", "diffexpr: derivative agrees", "non-diffexpr: undefined",
                        "known cases"}) {
    r.expect_branch(b);
  }

  const std::pair<const char*, const char*> known[] = {
      {"sin(x^2+x)", "(2*x+1)*cos(x^2+x)"},
      {"ln(x^2-1)", "2*x/(x^2-1)"},
  };
  for (const auto& [in, expect] : known) {
    const Term t = parse(in, Lang::DiffExpr);
    check_diff_case(r, t);
    const auto d = diff(t);
    r.record("known cases", d && simplify(*d) == simplify(parse(expect, Lang::DiffExpr)),
             std::string(in) + " -> " + show(d));
  }

  for (int i = 0; i < cfg.cases; ++i) check_diff_case(r, gen.diff_expr());
  const int non = std::max(1, cfg.cases / 5);
  for (int i = 0; i < non; ++i) {
    const Term t = gen.non_diff_expr();
    const auto d = diff(t);
    r.record("non-diffexpr: undefined", !d && !is_diff_expr(t), show(t) + " -> " + show(d));
  }
  r.seconds = timer.seconds();
  return r;
}

Report check_disquotation(const GenConfig& cfg) {
  Timer timer;
  TermGen gen(cfg);
  Report r;
  r.suite = "disquote";
  const SemType I = SemType::integer(), Qt = SemType::rational(), F = SemType::fraction(),
                QQ = SemType::arrow(Qt, Qt), EPS = SemType::syntax();
  for (const char* b : {"I: integer terms", "Q: rational terms", "Q: division by zero is undefined",
                        "F: rational expressions", "Q -> Q: rational functions", "EPS: quotations",
                        "type mismatch: undefined"}) {
    r.expect_branch(b);
  }

  for (int i = 0; i < cfg.cases; ++i) {
    {
      const auto v = i % 2 == 0 ? gen.int_term() : Valued<BigInt>{gen.numeral(), BigInt(0)};
      const BigInt expect = v.term.is<IntLit>() ? v.term.get<IntLit>()->value : v.value;
      const auto got = eval_as(quote(v.term), I);
      r.record("I: integer terms", got && std::get<BigInt>(*got) == expect, show(v.term));
    }
    {
      const auto v = gen.rat_term();
      const auto got = eval_as(quote(v.term), Qt);
      r.record("Q: rational terms", got && std::get<BigRat>(*got) == v.value, show(v.term));
    }
    if (i % 5 == 0) {
      const auto v = gen.rat_term();
      const Term bad = Q().mul(v.term, Q().inv(Q().sub(v.term, v.term)));
      r.record("Q: division by zero is undefined", !eval_as(quote(bad), Qt), show(bad));
    }
    {
      Term t = gen.rat_expr();
      std::optional<OracleFrac> o;
      while (!(o = oracle_flatten(t))) t = gen.rat_expr();
      const auto got = eval_as(quote(t), F);
      bool ok = false;
      if (got) {
        const auto& c = std::get<CanonicalFraction>(*got);
        ok = o->num * c.den() == c.num() * o->den;
      }
      r.record("F: rational expressions", ok, show(t));
    }
    {
      const Term f = gen.rat_fun();
      const auto got = eval_as(quote(f), QQ);
      bool ok = got.has_value();
      for (int k = 0; ok && k < 5; ++k) {
        const BigRat a = gen.small_rational();
        const auto want = oracle_eval_at(*body(f), a);
        const auto have = eval_rat_at(*body(std::get<FnQQ>(*got).lambda), a);
        ok = (!want && !have) || (want && have && *want == *have);
      }
      r.record("Q -> Q: rational functions", ok, show(f));
    }
    {
      const Term inner = i % 3 == 0 ? gen.diff_expr() : (i % 3 == 1 ? gen.rat_expr() : gen.int_term().term);
      const auto got = eval_as(quote(quote(inner)), EPS);
      r.record("EPS: quotations", got && std::get<Term>(*got) == inner, show(inner));
    }
  }

  const int mismatches = std::max(1, cfg.cases / 5);
  for (int i = 0; i < mismatches; ++i) {
    Term b = Term::int_lit(BigInt(0));
    SemType ty = I;
    switch (i % 7) {
      case 0: b = gen.int_term().term; ty = Qt; break;
      case 1: b = gen.rat_term().term; ty = I; break;
      case 2: b = Q().add(gen.rat_expr(), Q().var()); ty = Qt; break;
      case 3: b = gen.rat_fun(); ty = F; break;
      case 4: b = gen.numeral(); ty = SemType::real(); break;
      case 5: b = quote(gen.numeral()); ty = I; break;
      default: b = gen.rat_expr(); ty = EPS; break;
    }
    r.record("type mismatch: undefined", !eval_as(quote(b), ty), show(b) + " at " + ty.to_string());
  }
  r.seconds = timer.seconds();
  return r;
}

}  // namespace sbcas
