#pragma once

// Syntax trees and their semantic types.
//
// A Term is an immutable, structurally shared syntax value. Trees are allowed
// to be ill-typed; well-typedness is a separate question answered by
// type_of / is_expr_of against the constant signature below. Term identity is
// structural equality (no alpha-conversion).

#include "sbcas/exact.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sbcas {

class SemType {
 public:
  enum class Kind { Int, Rat, Frac, Real, Bool, Syntax, Arrow };

  static SemType integer() { return SemType(Kind::Int); }
  static SemType rational() { return SemType(Kind::Rat); }
  static SemType fraction() { return SemType(Kind::Frac); }
  static SemType real() { return SemType(Kind::Real); }
  static SemType boolean() { return SemType(Kind::Bool); }
  static SemType syntax() { return SemType(Kind::Syntax); }
  static SemType arrow(SemType from, SemType to);

  Kind kind() const { return kind_; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  /// Domain and codomain of an arrow type; undefined behaviour otherwise.
  const SemType& from() const { return arrow_->first; }
  const SemType& to() const { return arrow_->second; }

  /// "I", "Q", "F", "R", "O", "EPS"; arrows associate to the right: "Q -> Q -> Q".
  std::string to_string() const;

  friend bool operator==(const SemType& a, const SemType& b);

 private:
  explicit SemType(Kind k) : kind_(k) {}

  Kind kind_;
  std::shared_ptr<const std::pair<SemType, SemType>> arrow_;
};

struct TermNode;

class Term {
 public:
  static Term int_lit(BigInt value);
  static Term rat_lit(BigRat value);
  static Term var(std::string name, SemType type);
  static Term constant(std::string symbol, SemType type);
  static Term app(Term fun, Term arg);
  static Term lambda(std::string var, SemType var_type, Term body);
  static Term quote(Term body);

  const TermNode& node() const { return *node_; }
  template <class T>
  const T* get() const;
  template <class T>
  bool is() const { return get<T>() != nullptr; }

  /// Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const TermNode> node_;
};

struct IntLit {
  BigInt value;
};
struct RatLit {
  BigRat value;
};
struct Var {
  std::string name;
  SemType type;
};
struct Const {
  std::string symbol;
  SemType type;
};
struct App {
  Term fun;
  Term arg;
};
struct Lambda {
  std::string var;
  SemType var_type;
  Term body;
};
struct Quote {
  Term body;
};

struct TermNode {
  std::variant<IntLit, RatLit, Var, Const, App, Lambda, Quote> v;
};

template <class T>
const T* Term::get() const {
  return std::get_if<T>(&node_->v);
}

// ---------------------------------------------------------------------------
// Constant signature

namespace sym {
inline constexpr std::string_view kAdd = "+";
inline constexpr std::string_view kMul = "*";
inline constexpr std::string_view kNeg = "-";
inline constexpr std::string_view kInv = "inv";
inline constexpr std::string_view kPow = "^";
inline constexpr std::string_view kExp = "exp";
inline constexpr std::string_view kLn = "ln";
inline constexpr std::string_view kSin = "sin";
inline constexpr std::string_view kCos = "cos";
inline constexpr std::string_view kTan = "tan";
/// Embedding of a rational literal into the reals.
inline constexpr std::string_view kReal = "real";
/// The indeterminate of Q(x) at type F.
inline constexpr std::string_view kIndet = "X";
}  // namespace sym

/// True when (symbol, type) is a registered constant.
bool in_signature(std::string_view symbol, const SemType& type);

/// Builders and matchers for the operators of one base type. Building never
/// fails: asking for an operator the base type does not have yields a constant
/// outside the signature, which the type checker then rejects.
class Ops {
 public:
  explicit Ops(SemType base);

  const SemType& base() const { return base_; }

  Term var(std::string name = "x") const { return Term::var(std::move(name), base_); }
  Term add(Term a, Term b) const { return binary(sym::kAdd, std::move(a), std::move(b)); }
  Term mul(Term a, Term b) const { return binary(sym::kMul, std::move(a), std::move(b)); }
  Term pow(Term a, Term b) const { return binary(sym::kPow, std::move(a), std::move(b)); }
  Term neg(Term a) const { return unary(sym::kNeg, std::move(a)); }
  Term inv(Term a) const { return unary(sym::kInv, std::move(a)); }
  /// a - b is sugar for a + (-b).
  Term sub(Term a, Term b) const { return add(std::move(a), neg(std::move(b))); }
  /// a / b is sugar for a * b^-1.
  Term div(Term a, Term b) const { return mul(std::move(a), inv(std::move(b))); }
  Term unary(std::string_view symbol, Term a) const;
  Term binary(std::string_view symbol, Term a, Term b) const;

  std::optional<std::pair<Term, Term>> match_binary(const Term& t, std::string_view symbol) const;
  std::optional<Term> match_unary(const Term& t, std::string_view symbol) const;
  std::optional<std::pair<Term, Term>> match_add(const Term& t) const { return match_binary(t, sym::kAdd); }
  std::optional<std::pair<Term, Term>> match_mul(const Term& t) const { return match_binary(t, sym::kMul); }
  std::optional<std::pair<Term, Term>> match_pow(const Term& t) const { return match_binary(t, sym::kPow); }
  std::optional<Term> match_neg(const Term& t) const { return match_unary(t, sym::kNeg); }
  std::optional<Term> match_inv(const Term& t) const { return match_unary(t, sym::kInv); }
  bool is_var(const Term& t, std::string_view name = "x") const;

 private:
  SemType base_;
  SemType unary_type_;
  SemType binary_type_;
};

const Ops& int_ops();
const Ops& rat_ops();
const Ops& frac_ops();
const Ops& real_ops();

/// real(c): a rational constant at type R.
Term real_lit(const BigRat& c);
std::optional<BigRat> match_real_lit(const Term& t);

/// A constant-headed application spine: ((c a1) a2) ... an.
struct OpApp {
  std::string symbol;
  SemType type;
  std::vector<Term> args;
};
std::optional<OpApp> as_op(const Term& t);

// ---------------------------------------------------------------------------
// Typing and quotation

/// The type of t under the signature, or nullopt when t is ill-typed.
std::optional<SemType> type_of(const Term& t);
bool is_expr_of(const Term& t, const SemType& ty);

Term quote(const Term& t);
/// The quoted tree, or nullopt when t is not a Quote node.
std::optional<Term> unquote(const Term& t);

}  // namespace sbcas
