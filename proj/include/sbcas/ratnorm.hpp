#pragma once

// Rational expressions and rational functions in x over Q.
//
// A rational expression is a Q-typed tree over x, rational literals and the
// field operators + * - inv. It is read two ways: as a member of the field of
// fractions Q(x) (val_in_f, norm_rat_expr), and as the body of a partial
// function Q -> Q (eval_rat_at, norm_rat_fun). The two readings disagree on
// points of undefinedness, which is why there are two normalizers.

#include "sbcas/fraction.hpp"
#include "sbcas/term.hpp"

#include <optional>
#include <vector>

namespace sbcas {

bool is_rat_expr(const Term& t);
/// Lambda(x:Q, B) with is_rat_expr(B).
bool is_rat_fun(const Term& t);

/// Denotation in Q(x); nullopt when some inverted subterm denotes 0.
/// Throws std::invalid_argument when t is not a rational expression.
std::optional<CanonicalFraction> val_in_f(const Term& t);

/// Strict pointwise evaluation with x := a. Division by a zero anywhere in the
/// tree makes the result undefined, even if the flattened fraction would not be.
std::optional<BigRat> eval_rat_at(const Term& t, const BigRat& a);

/// Body of a lambda; undefined on every other tree.
std::optional<Term> body(const Term& t);

/// Canonical rendering: descending powers, x^k as a left-nested product,
/// coefficient 1 omitted, negative coefficients as subtraction.
Term poly_to_term(const Poly& p);
/// poly_to_term(num), times inv(poly_to_term(den)) unless den = 1.
Term frac_to_term(const CanonicalFraction& c);
/// The distinguished undefined normal form 1 * inv(0).
Term undefined_normal_form();

bool is_norm(const Term& t);
bool is_quasinorm(const Term& t);

/// Normal form in Q(x); undefined_normal_form() when the input is undefined in
/// Q(x); nullopt when t is not a rational expression.
std::optional<Term> norm_rat_expr(const Term& t);

/// Quasinormal form p/q: only common factors without rational roots are
/// cancelled, so every rational point where t is undefined stays undefined.
/// Throws std::invalid_argument when t is not a rational expression.
Term quasinorm_rat_expr(const Term& t);

/// Lambda(x, quasinorm_rat_expr(body)), or nullopt when t is not a rational function.
std::optional<Term> norm_rat_fun(const Term& t);

/// Both bodies undefined at a, or both defined and equal.
/// Throws std::invalid_argument unless f and g are rational functions.
bool fn_quasi_equal_at(const Term& f, const Term& g, const BigRat& a);

/// Numerators of every inverted subterm, flattened without reduction. Their
/// rational roots are the candidate points of undefinedness of t.
std::vector<Poly> inverted_numerators(const Term& t);

}  // namespace sbcas
