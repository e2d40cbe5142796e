#pragma once

// Concrete syntax.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := number | literal | 'x' | ident '(' expr ')' | '(' expr ')'
//   ratfun := 'fun' 'x' '->' expr
//
// `literal` is a parenthesised signed rational written without spaces, such
// as (-3) or (1/2); it denotes a single literal node rather than a negation or
// a division. `exponent` is a number, a literal, or '-' number. Functions are
// sin, cos, tan, exp, ln and inv.
//
// Subtraction and division are sugar for a + (-b) and a * inv(b). In ratexpr
// mode u^n (n >= 0) is sugar for the left-nested product u * u * ... * u; in
// diffexpr mode it is the power operator with a rational exponent.

#include "sbcas/term.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbcas {

enum class Lang { Int, RatExpr, RatFun, DiffExpr };
enum class Format { Infix, Sexpr, Json };

std::optional<Lang> lang_from_string(std::string_view name);
std::optional<Format> format_from_string(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The text parsed, but the tree is outside the language asked for.
class PredicateViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError or PredicateViolation.
Term parse(std::string_view src, Lang lang);

/// Infix output parses back to the same tree for every in-language term.
std::string print(const Term& t, Format format = Format::Infix);

}  // namespace sbcas
