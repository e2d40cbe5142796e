#pragma once

// Evaluation of quotations: eval_as(quote(B), ty) is the denotation of B at
// type ty, or undefined.

#include "sbcas/fraction.hpp"
#include "sbcas/term.hpp"

#include <optional>
#include <string>
#include <variant>

namespace sbcas {

/// A rational function, applied pointwise by eval_rat_at.
struct FnQQ {
  Term lambda;
};

using Value = std::variant<BigInt, BigRat, CanonicalFraction, FnQQ, Term>;

/// Supported targets:
///   I       integer folding of closed I-terms
///   Q       rational folding of closed Q-terms
///   F       rational expressions in x_q via val_in_f, and F-typed terms over X
///   Q -> Q  rational functions (returned unevaluated as FnQQ)
///   EPS     a quotation denotes the tree it quotes
/// Free variables, type mismatches and division by zero are undefined.
/// Throws std::invalid_argument when `quoted` is not a Quote node.
std::optional<Value> eval_as(const Term& quoted, const SemType& ty);

std::string to_string(const Value& v);

}  // namespace sbcas
