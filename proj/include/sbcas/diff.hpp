#pragma once

// Symbolic differentiation over the language of real expressions in x built
// from literals, + * - inv, powers with a literal rational exponent, exp, ln,
// sin, cos and tan.

#include "sbcas/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sbcas {

/// nullopt means undefined; a defined value is always finite.
using RealResult = std::optional<double>;

bool is_diff_expr(const Term& t);

/// Derivative with respect to x, simplified. Undefined outside the language.
std::optional<Term> diff(const Term& t);

/// Constant folding and identity/annihilator cleanup, run to a fixpoint.
Term simplify(const Term& t);

/// Strict evaluation at x = a. Throws std::invalid_argument outside the language.
RealResult eval_real(const Term& t, double a);

/// Extrapolated central difference, or undefined when f is not defined around
/// a or the difference quotients do not settle.
RealResult deriv_numeric(const Term& t, double a);

struct DiffViolation {
  double point;
  double numeric;
  RealResult symbolic;
};

struct DiffCheckReport {
  int checked = 0;  // points where the numeric derivative exists
  int vacuous = 0;  // points where it does not
  std::vector<DiffViolation> violations;
  bool ok() const { return violations.empty(); }
};

DiffCheckReport check_spec_diff(const Term& t, const std::vector<double>& points);

enum class Definedness { Defined, Undefined };

struct DomainPoint {
  double point;
  Definedness status;
};

/// n evenly spaced points from lo to hi inclusive. Throws std::invalid_argument
/// unless lo < hi and n >= 2.
std::vector<DomainPoint> domain_sample(const Term& t, double lo, double hi, int n);

}  // namespace sbcas
