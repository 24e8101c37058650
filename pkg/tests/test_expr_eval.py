"""Expression construction, certified evaluation, and decimal policy."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goldenflag.errors import CertificationError, DivisionByZero, NotInField
from goldenflag.exactnum import (
    PHI_EXPR,
    SQRT5_EXPR,
    GoldenNumber,
    Literal,
    Sign,
    Sqrt,
    add,
    certified_sign,
    decimal_str,
    div,
    expr_eval,
    gn_normalize,
    gn_sign,
    gn_to_expr,
    lit,
    mul,
    neg,
    sqrt_,
    sub,
    truncated_str,
)
from goldenflag.geometry import TAN36

from conftest import decimal_oracle_tan36

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


class TestSmartConstructors:
    def test_rational_subtrees_fold_to_literals(self):
        assert add(lit(1), lit(Fraction(1, 2))) == lit(Fraction(3, 2))
        assert mul(lit(Fraction(3, 4)), lit(4)) == lit(3)
        assert div(lit(3), lit(10)) == lit(Fraction(3, 10))
        assert neg(lit(2)) == lit(-2)

    def test_identity_elements_vanish(self):
        assert add(lit(0), TAN36) is TAN36
        assert mul(TAN36, lit(1)) is TAN36
        assert mul(lit(0), TAN36) == lit(0)
        assert div(TAN36, lit(1)) is TAN36

    def test_perfect_square_roots_fold(self):
        assert sqrt_(lit(4)) == lit(2)
        assert sqrt_(lit(Fraction(9, 4))) == lit(Fraction(3, 2))
        assert sqrt_(lit(0)) == lit(0)
        assert isinstance(sqrt_(lit(5)), Sqrt)

    def test_operator_sugar(self):
        assert (lit(1) + lit(2)) == lit(3)
        assert (2 * SQRT5_EXPR) == mul(lit(2), SQRT5_EXPR)

    def test_division_by_certified_zero(self):
        with pytest.raises(DivisionByZero):
            div(lit(1), lit(0))
        # phi^2 - phi - 1 is exactly zero even though it is irrational-shaped
        zero = sub(sub(mul(PHI_EXPR, PHI_EXPR), PHI_EXPR), lit(1))
        with pytest.raises(DivisionByZero):
            div(lit(1), zero)

    def test_sqrt_of_certified_negative(self):
        with pytest.raises(CertificationError):
            sqrt_(lit(-1))
        with pytest.raises(CertificationError):
            sqrt_(sub(lit(0), lit(1)))


class TestExprEval:
    def test_exact_literal_has_zero_radius(self):
        ball = expr_eval(lit(Fraction(3, 2)), 64)
        assert ball.center == Fraction(3, 2)
        assert ball.radius == 0

    def test_tan36_ball_contains_independent_value(self):
        oracle = decimal_oracle_tan36()
        ball = expr_eval(TAN36, 64)
        assert ball.contains(oracle)
        assert ball.radius <= Fraction(1, 2**64) * max(1, abs(ball.center))

    def test_relative_radius_contract(self):
        for bits in (16, 64, 128, 300):
            ball = expr_eval(TAN36, bits)
            assert ball.radius <= Fraction(1, 2**bits) * max(1, abs(ball.center))

    def test_radius_shrinks_with_precision(self):
        expressions = [TAN36, PHI_EXPR, div(lit(1), TAN36)]
        for expr in expressions:
            radii = [expr_eval(expr, bits).radius for bits in (48, 64, 96, 128, 256)]
            assert all(r2 <= r1 for r1, r2 in zip(radii, radii[1:]))

    def test_rejects_nonpositive_precision(self):
        with pytest.raises(ValueError):
            expr_eval(lit(1), 0)

    @given(rationals, rationals)
    @settings(max_examples=150)
    def test_ball_contains_the_exact_field_value(self, a, b):
        g = GoldenNumber(a, b)
        expr = gn_to_expr(g)
        assert gn_normalize(expr) == g
        ball = expr_eval(expr, 64)
        # exact containment: value - lower >= 0 and upper - value >= 0,
        # decided inside the field with no floating point
        assert gn_sign(GoldenNumber(a - ball.lower(), b)).is_nonnegative
        assert gn_sign(GoldenNumber(ball.upper() - a, -b)).is_nonnegative

    @given(rationals, rationals)
    @settings(max_examples=150)
    def test_interval_sign_agrees_with_exact_sign(self, a, b):
        g = GoldenNumber(a, b)
        ball_sign = expr_eval(gn_to_expr(g), 64).sign()
        if ball_sign is not None:
            assert ball_sign is gn_sign(g)


class TestCertifiedSign:
    def test_exact_route(self):
        assert certified_sign(sub(mul(PHI_EXPR, PHI_EXPR), PHI_EXPR)) is Sign.POSITIVE
        assert certified_sign(sub(sub(mul(PHI_EXPR, PHI_EXPR), PHI_EXPR), lit(1))) is Sign.ZERO

    def test_interval_route_for_nested_radicals(self):
        nested = sub(sqrt_(sub(lit(118), mul(lit(48), sqrt_(lit(2))))), lit(6))
        assert certified_sign(nested) is Sign.POSITIVE


class TestDecimalPolicy:
    def test_round_half_even_at_ties(self):
        assert decimal_str(lit(Fraction(3, 20)), 1) == "0.2"   # 0.15 -> even 2
        assert decimal_str(lit(Fraction(1, 4)), 1) == "0.2"    # 0.25 -> even 2
        assert decimal_str(lit(Fraction(3, 4)), 1) == "0.8"    # 0.75 -> even 8
        assert decimal_str(lit(Fraction(1, 8)), 2) == "0.12"   # 0.125 -> even 12

    def test_trailing_zeros_trimmed(self):
        assert decimal_str(lit(Fraction(3, 2)), 6) == "1.5"
        assert decimal_str(lit(900), 12) == "900"
        assert decimal_str(lit(0), 6) == "0"
        assert decimal_str(lit(Fraction(-3, 2)), 4) == "-1.5"

    def test_small_magnitudes_keep_leading_zeros(self):
        assert decimal_str(lit(Fraction(123, 100000)), 3) == "0.00123"

    def test_carry_across_a_decade(self):
        assert decimal_str(lit(Fraction(99999, 100000)), 3) == "1"

    def test_rounding_versus_truncation_differ_for_tan36(self):
        # the expansion starts 0.72654...: rounded 3 significant digits
        # carry up, truncation keeps the printed prefix
        assert decimal_str(TAN36, 3) == "0.727"
        assert truncated_str(TAN36, 3) == "0.726"

    def test_certified_output_stable_under_extra_precision(self):
        baseline = decimal_str(TAN36, 12)
        assert decimal_str(TAN36, 12, min_bits=2048) == baseline

    def test_truncation_requires_nonnegative(self):
        with pytest.raises(ValueError):
            truncated_str(lit(-1), 3)


class TestNormalize:
    def test_phi_expression(self):
        assert gn_normalize(PHI_EXPR) == GoldenNumber(Fraction(1, 2), Fraction(1, 2))

    def test_sqrt_twenty_is_two_root_five(self):
        assert gn_normalize(Sqrt(Literal(Fraction(20)))) == GoldenNumber(0, 2)

    def test_nested_radical_is_out_of_field(self):
        with pytest.raises(NotInField):
            gn_normalize(sqrt_(sub(lit(10), mul(lit(2), SQRT5_EXPR))))

    def test_division_folds_through_conjugation(self):
        expr = div(lit(1), add(lit(2), SQRT5_EXPR))
        assert gn_normalize(expr) == GoldenNumber(-2, 1)
