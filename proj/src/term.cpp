#include "sbcas/term.hpp"

#include <algorithm>
#include <array>

namespace sbcas {

SemType SemType::arrow(SemType from, SemType to) {
  SemType t(Kind::Arrow);
  t.arrow_ = std::make_shared<const std::pair<SemType, SemType>>(std::move(from), std::move(to));
  return t;
}

std::string SemType::to_string() const {
  switch (kind_) {
    case Kind::Int: return "I";
    case Kind::Rat: return "Q";
    case Kind::Frac: return "F";
    case Kind::Real: return "R";
    case Kind::Bool: return "O";
    case Kind::Syntax: return "EPS";
    case Kind::Arrow: {
      std::string lhs = from().to_string();
      if (from().is_arrow()) lhs = "(" + lhs + ")";
      return lhs + " -> " + to().to_string();
    }
  }
  return "?";
}

bool operator==(const SemType& a, const SemType& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SemType::Kind::Arrow) return true;
  return a.arrow_ == b.arrow_ || (a.from() == b.from() && a.to() == b.to());
}

// ---------------------------------------------------------------------------

Term Term::int_lit(BigInt value) {
  return Term(std::make_shared<const TermNode>(TermNode{IntLit{std::move(value)}}));
}
Term Term::rat_lit(BigRat value) {
  return Term(std::make_shared<const TermNode>(TermNode{RatLit{std::move(value)}}));
}
Term Term::var(std::string name, SemType type) {
  return Term(std::make_shared<const TermNode>(TermNode{Var{std::move(name), std::move(type)}}));
}
Term Term::constant(std::string symbol, SemType type) {
  return Term(std::make_shared<const TermNode>(TermNode{Const{std::move(symbol), std::move(type)}}));
}
Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const TermNode>(TermNode{App{std::move(fun), std::move(arg)}}));
}
Term Term::lambda(std::string var, SemType var_type, Term body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Lambda{std::move(var), std::move(var_type), std::move(body)}}));
}
Term Term::quote(Term body) {
  return Term(std::make_shared<const TermNode>(TermNode{Quote{std::move(body)}}));
}

std::size_t Term::size() const {
  if (const auto* a = get<App>()) return 1 + a->fun.size() + a->arg.size();
  if (const auto* l = get<Lambda>()) return 1 + l->body.size();
  if (const auto* q = get<Quote>()) return 1 + q->body.size();
  return 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  if (va.index() != vb.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(vb);
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, RatLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name && x.type == y.type;
        } else if constexpr (std::is_same_v<T, Const>) {
          return x.symbol == y.symbol && x.type == y.type;
        } else if constexpr (std::is_same_v<T, App>) {
          return x.fun == y.fun && x.arg == y.arg;
        } else if constexpr (std::is_same_v<T, Lambda>) {
          return x.var == y.var && x.var_type == y.var_type && x.body == y.body;
        } else {
          return x.body == y.body;
        }
      },
      va);
}

// ---------------------------------------------------------------------------
// Signature

namespace {

struct SigEntry {
  std::string_view symbol;
  SemType type;
};

std::vector<SigEntry> build_signature() {
  const SemType I = SemType::integer();
  const SemType Q = SemType::rational();
  const SemType F = SemType::fraction();
  const SemType R = SemType::real();
  auto un = [](const SemType& t) { return SemType::arrow(t, t); };
  auto bin = [](const SemType& t) { return SemType::arrow(t, SemType::arrow(t, t)); };

  std::vector<SigEntry> sig;
  // integer arithmetic
  sig.push_back({sym::kAdd, bin(I)});
  sig.push_back({sym::kMul, bin(I)});
  sig.push_back({sym::kPow, bin(I)});
  sig.push_back({sym::kNeg, un(I)});
  // the fields Q and Q(x)
  for (const SemType& t : {Q, F}) {
    sig.push_back({sym::kAdd, bin(t)});
    sig.push_back({sym::kMul, bin(t)});
    sig.push_back({sym::kNeg, un(t)});
    sig.push_back({sym::kInv, un(t)});
  }
  sig.push_back({sym::kIndet, F});
  // the differentiable language over R
  sig.push_back({sym::kAdd, bin(R)});
  sig.push_back({sym::kMul, bin(R)});
  sig.push_back({sym::kPow, bin(R)});
  for (std::string_view fn : {sym::kNeg, sym::kInv, sym::kExp, sym::kLn, sym::kSin, sym::kCos, sym::kTan}) {
    sig.push_back({fn, un(R)});
  }
  sig.push_back({sym::kReal, SemType::arrow(Q, R)});
  return sig;
}

const std::vector<SigEntry>& signature() {
  static const std::vector<SigEntry> sig = build_signature();
  return sig;
}

}  // namespace

bool in_signature(std::string_view symbol, const SemType& type) {
  const auto& sig = signature();
  return std::any_of(sig.begin(), sig.end(),
                     [&](const SigEntry& e) { return e.symbol == symbol && e.type == type; });
}

Ops::Ops(SemType base)
    : base_(base),
      unary_type_(SemType::arrow(base, base)),
      binary_type_(SemType::arrow(base, SemType::arrow(base, base))) {}

Term Ops::unary(std::string_view symbol, Term a) const {
  return Term::app(Term::constant(std::string(symbol), unary_type_), std::move(a));
}

Term Ops::binary(std::string_view symbol, Term a, Term b) const {
  return Term::app(Term::app(Term::constant(std::string(symbol), binary_type_), std::move(a)),
                   std::move(b));
}

std::optional<std::pair<Term, Term>> Ops::match_binary(const Term& t, std::string_view symbol) const {
  const auto* outer = t.get<App>();
  if (!outer) return std::nullopt;
  const auto* inner = outer->fun.get<App>();
  if (!inner) return std::nullopt;
  const auto* c = inner->fun.get<Const>();
  if (!c || c->symbol != symbol || !(c->type == binary_type_)) return std::nullopt;
  return std::make_pair(inner->arg, outer->arg);
}

std::optional<Term> Ops::match_unary(const Term& t, std::string_view symbol) const {
  const auto* a = t.get<App>();
  if (!a) return std::nullopt;
  const auto* c = a->fun.get<Const>();
  if (!c || c->symbol != symbol || !(c->type == unary_type_)) return std::nullopt;
  return a->arg;
}

bool Ops::is_var(const Term& t, std::string_view name) const {
  const auto* v = t.get<Var>();
  return v && v->name == name && v->type == base_;
}

const Ops& int_ops() {
  static const Ops ops(SemType::integer());
  return ops;
}
const Ops& rat_ops() {
  static const Ops ops(SemType::rational());
  return ops;
}
const Ops& frac_ops() {
  static const Ops ops(SemType::fraction());
  return ops;
}
const Ops& real_ops() {
  static const Ops ops(SemType::real());
  return ops;
}

Term real_lit(const BigRat& c) {
  static const SemType embed = SemType::arrow(SemType::rational(), SemType::real());
  return Term::app(Term::constant(std::string(sym::kReal), embed), Term::rat_lit(c));
}

std::optional<BigRat> match_real_lit(const Term& t) {
  const auto* a = t.get<App>();
  if (!a) return std::nullopt;
  const auto* c = a->fun.get<Const>();
  if (!c || c->symbol != sym::kReal) return std::nullopt;
  if (!(c->type == SemType::arrow(SemType::rational(), SemType::real()))) return std::nullopt;
  const auto* lit = a->arg.get<RatLit>();
  if (!lit) return std::nullopt;
  return lit->value;
}

std::optional<OpApp> as_op(const Term& t) {
  std::vector<Term> args;
  const Term* cur = &t;
  while (const auto* a = cur->get<App>()) {
    args.push_back(a->arg);
    cur = &a->fun;
  }
  const auto* c = cur->get<Const>();
  if (!c || args.empty()) return std::nullopt;
  std::reverse(args.begin(), args.end());
  return OpApp{c->symbol, c->type, std::move(args)};
}

// ---------------------------------------------------------------------------
// Typing

std::optional<SemType> type_of(const Term& t) {
  return std::visit(
      [](const auto& n) -> std::optional<SemType> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return SemType::integer();
        } else if constexpr (std::is_same_v<T, RatLit>) {
          return SemType::rational();
        } else if constexpr (std::is_same_v<T, Var>) {
          if (n.name.empty()) return std::nullopt;
          return n.type;
        } else if constexpr (std::is_same_v<T, Const>) {
          if (!in_signature(n.symbol, n.type)) return std::nullopt;
          return n.type;
        } else if constexpr (std::is_same_v<T, App>) {
          auto f = type_of(n.fun);
          if (!f || !f->is_arrow()) return std::nullopt;
          auto a = type_of(n.arg);
          if (!a || !(*a == f->from())) return std::nullopt;
          return f->to();
        } else if constexpr (std::is_same_v<T, Lambda>) {
          if (n.var.empty()) return std::nullopt;
          auto b = type_of(n.body);
          if (!b) return std::nullopt;
          return SemType::arrow(n.var_type, *b);
        } else {
          return SemType::syntax();
        }
      },
      t.node().v);
}

bool is_expr_of(const Term& t, const SemType& ty) {
  const auto inferred = type_of(t);
  return inferred && *inferred == ty;
}

Term quote(const Term& t) { return Term::quote(t); }

std::optional<Term> unquote(const Term& t) {
  if (const auto* q = t.get<Quote>()) return q->body;
  return std::nullopt;
}

}  // namespace sbcas
