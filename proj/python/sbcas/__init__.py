"""Syntax-based algorithms: integer factoring, rational normalization, differentiation.

Terms are immutable trees; build them with ``parse`` and render them with
``str`` (infix), ``Term.sexpr()`` or ``Term.json()``. Functions that can be
undefined return ``None``.
"""

from ._core import (
    ParseError,
    PredicateViolation,
    Term,
    check,
    deriv_numeric,
    diff,
    domain_sample,
    eval_rat_at,
    eval_real,
    factor,
    factor_int,
    is_diff_expr,
    is_norm,
    is_prime,
    is_quasinorm,
    is_rat_expr,
    is_rat_fun,
    maple,
    norm_rat_expr,
    norm_rat_fun,
    parse,
    run_cli,
    simplify,
)

__all__ = [
    "ParseError",
    "PredicateViolation",
    "Term",
    "check",
    "deriv_numeric",
    "diff",
    "domain_sample",
    "eval_rat_at",
    "eval_real",
    "factor",
    "factor_int",
    "is_diff_expr",
    "is_norm",
    "is_prime",
    "is_quasinorm",
    "is_rat_expr",
    "is_rat_fun",
    "maple",
    "norm_rat_expr",
    "norm_rat_fun",
    "parse",
    "run_cli",
    "simplify",
]
