#include "sbcas/eval.hpp"

#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <stdexcept>

namespace sbcas {

namespace {

std::optional<BigInt> fold_int(const Term& t) {
  const Ops& z = int_ops();
  if (const auto* lit = t.get<IntLit>()) return lit->value;
  if (auto ab = z.match_add(t)) {
    auto a = fold_int(ab->first);
    auto b = a ? fold_int(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a + *b;
  }
  if (auto ab = z.match_mul(t)) {
    auto a = fold_int(ab->first);
    auto b = a ? fold_int(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a * *b;
  }
  if (auto ab = z.match_pow(t)) {
    auto a = fold_int(ab->first);
    auto b = a ? fold_int(ab->second) : std::nullopt;
    if (!b || b->sign() < 0 || !b->fits_long()) return std::nullopt;
    return pow(*a, static_cast<unsigned long>(b->to_long()));
  }
  if (auto u = z.match_neg(t)) {
    auto a = fold_int(*u);
    if (!a) return std::nullopt;
    return -*a;
  }
  return std::nullopt;
}

std::optional<BigRat> fold_rat(const Term& t) {
  const Ops& q = rat_ops();
  if (const auto* lit = t.get<RatLit>()) return lit->value;
  if (auto ab = q.match_add(t)) {
    auto a = fold_rat(ab->first);
    auto b = a ? fold_rat(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a + *b;
  }
  if (auto ab = q.match_mul(t)) {
    auto a = fold_rat(ab->first);
    auto b = a ? fold_rat(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a * *b;
  }
  if (auto u = q.match_neg(t)) {
    auto a = fold_rat(*u);
    if (!a) return std::nullopt;
    return -*a;
  }
  if (auto u = q.match_inv(t)) {
    auto a = fold_rat(*u);
    if (!a || a->is_zero()) return std::nullopt;
    return inv(*a);
  }
  return std::nullopt;
}

// Terms of type F built from the indeterminate X and the field operators of F.
std::optional<CanonicalFraction> fold_frac(const Term& t) {
  const Ops& f = frac_ops();
  if (const auto* c = t.get<Const>(); c && c->symbol == sym::kIndet) return CanonicalFraction::x();
  if (auto ab = f.match_add(t)) {
    auto a = fold_frac(ab->first);
    auto b = a ? fold_frac(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a + *b;
  }
  if (auto ab = f.match_mul(t)) {
    auto a = fold_frac(ab->first);
    auto b = a ? fold_frac(ab->second) : std::nullopt;
    if (!b) return std::nullopt;
    return *a * *b;
  }
  if (auto u = f.match_neg(t)) {
    auto a = fold_frac(*u);
    if (!a) return std::nullopt;
    return -*a;
  }
  if (auto u = f.match_inv(t)) {
    auto a = fold_frac(*u);
    if (!a || a->is_zero()) return std::nullopt;
    return a->inverse();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Value> eval_as(const Term& quoted, const SemType& ty) {
  auto b = unquote(quoted);
  if (!b) throw std::invalid_argument("not a quotation");
  const Term& B = *b;

  switch (ty.kind()) {
    case SemType::Kind::Int:
      if (!is_expr_of(B, ty)) return std::nullopt;
      if (auto v = fold_int(B)) return Value{*v};
      return std::nullopt;
    case SemType::Kind::Rat:
      if (!is_expr_of(B, ty)) return std::nullopt;
      if (auto v = fold_rat(B)) return Value{*v};
      return std::nullopt;
    case SemType::Kind::Frac:
      if (is_expr_of(B, ty)) {
        if (auto v = fold_frac(B)) return Value{*v};
        return std::nullopt;
      }
      if (is_rat_expr(B)) {
        if (auto v = val_in_f(B)) return Value{*v};
      }
      return std::nullopt;
    case SemType::Kind::Arrow:
      if (ty == SemType::arrow(SemType::rational(), SemType::rational()) && is_rat_fun(B)) {
        return Value{FnQQ{B}};
      }
      return std::nullopt;
    case SemType::Kind::Syntax:
      if (auto inner = unquote(B)) return Value{*inner};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FnQQ>) {
          return print(x.lambda);
        } else if constexpr (std::is_same_v<T, Term>) {
          return print(x);
        } else {
          return x.to_string();
        }
      },
      v);
}

}  // namespace sbcas
