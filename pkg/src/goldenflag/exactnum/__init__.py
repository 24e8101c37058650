"""Exact scalar arithmetic: rationals, the a+b*sqrt(5) field, certified
constructible-number expressions, rigorous ball evaluation, and an
identity verifier."""

from .decimalfmt import decimal_str, round_fraction_str, truncated_str
from .expr import (
    Add,
    Ball,
    Div,
    Expr,
    Literal,
    Mul,
    Neg,
    PHI_EXPR,
    SQRT5_EXPR,
    Sqrt,
    Sub,
    add,
    certified_sign,
    div,
    exact_rational,
    expr_eval,
    gn_normalize,
    gn_to_expr,
    lit,
    mul,
    neg,
    sqrt_,
    sub,
)
from .golden import (
    GN_ONE,
    GN_ZERO,
    PHI,
    GoldenNumber,
    Sign,
    gn_arith,
    gn_sign,
    gn_sqrt,
)
from .identity import Verdict, compare_values, square_of, verify_identity
from .rational import Rational, as_rational, is_perfect_square

__all__ = [
    "Add",
    "Ball",
    "Div",
    "Expr",
    "GN_ONE",
    "GN_ZERO",
    "GoldenNumber",
    "Literal",
    "Mul",
    "Neg",
    "PHI",
    "PHI_EXPR",
    "Rational",
    "SQRT5_EXPR",
    "Sign",
    "Sqrt",
    "Sub",
    "Verdict",
    "add",
    "as_rational",
    "certified_sign",
    "compare_values",
    "decimal_str",
    "div",
    "exact_rational",
    "expr_eval",
    "gn_arith",
    "gn_normalize",
    "gn_sign",
    "gn_sqrt",
    "gn_to_expr",
    "is_perfect_square",
    "lit",
    "mul",
    "neg",
    "round_fraction_str",
    "sqrt_",
    "square_of",
    "sub",
    "truncated_str",
    "verify_identity",
]
