"""Acceptance suite: every stated criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass/fail
line per criterion.
"""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from goldenflag.cli import main as cli_main
from goldenflag.constructions import (
    BUILTIN_NAMES,
    ColorRole,
    build_flag,
    build_independence_flag,
    nepal_ratio_expr,
    verify_angle_configuration,
)
from goldenflag.exactnum import (
    PHI_EXPR,
    SQRT5_EXPR,
    GoldenNumber,
    Verdict,
    add,
    compare_values,
    div,
    exact_rational,
    expr_eval,
    gn_normalize,
    gn_sign,
    gn_to_expr,
    lit,
    mul,
    sqrt_,
    square_of,
    sub,
    truncated_str,
    verify_identity,
)
from goldenflag.flagspec import lower_source
from goldenflag.geometry import TAN36, Pentagram, Point, pentagram_vertices
from goldenflag.render import RenderOptions, _Frame, json_emit, svg_emit

from goldenflag.exactnum import Sign, certified_sign


@contextmanager
def criterion(number: int, summary: str):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number:02d}: FAIL - {summary}")
        raise
    print(f"[acceptance] criterion {number:02d}: PASS - {summary}")


def test_01_tan36_truncation_prefix(capsys):
    with criterion(1, "tan(36) evaluates with printed truncation prefix 0.726"):
        started = time.monotonic()
        code = cli_main(
            ["eval", "sqrt(10-2*sqrt(5))/(1+sqrt(5))", "--digits", "10"]
        )
        elapsed = time.monotonic() - started
        out = capsys.readouterr().out.strip()
        assert code == 0
        assert out.startswith("0.726")
        assert out == "0.726542528"  # leading digits of 0.7265425280...
        assert truncated_str(TAN36, 3) == "0.726"
        assert elapsed < 1.0


def test_02_tan36_identity_proved_exactly():
    with criterion(2, "both tan(36) closed forms proved equal in the exact field"):
        second_form = div(sqrt_(sqrt_(lit(5))), sqrt_(add(lit(2), SQRT5_EXPR)))
        assert verify_identity(TAN36, second_form) is Verdict.PROVED_EQUAL
        expected_square = GoldenNumber(5, -2)  # 5 - 2*sqrt5
        assert gn_normalize(square_of(TAN36)) == expected_square
        assert gn_normalize(square_of(second_form)) == expected_square


def test_03_flag_ratio_value_and_identities(layouts):
    with criterion(3, "canvas ratio begins 1.801 and equals both closed forms"):
        ratio = layouts["chile-1818"].width_height_ratio()
        assert truncated_str(ratio, 3) == "1.801"
        closed = div(
            add(lit(2), SQRT5_EXPR), sqrt_(sub(lit(10), mul(lit(2), SQRT5_EXPR)))
        )
        assert verify_identity(ratio, closed) is Verdict.PROVED_EQUAL
        phi_form = div(mul(PHI_EXPR, PHI_EXPR), mul(lit(2), TAN36))
        assert verify_identity(ratio, phi_form) is Verdict.PROVED_EQUAL


def test_04_golden_ratios_in_the_layout(layouts):
    with criterion(4, "white/blue width and height/star-diameter both equal phi"):
        layout = layouts["chile-1818"]
        blue = next(r for r in layout.regions if r.color is ColorRole.BLUE)
        white = next(r for r in layout.regions if r.color is ColorRole.WHITE)
        blue_w = sub(blue.bounds[1], blue.bounds[0])
        blue_h = sub(blue.bounds[3], blue.bounds[2])
        white_w = sub(white.bounds[1], white.bounds[0])
        assert verify_identity(div(white_w, blue_w), PHI_EXPR) is Verdict.PROVED_EQUAL
        diameter = mul(lit(2), layout.stars[0].pentagram.circumradius)
        assert verify_identity(div(blue_h, diameter), PHI_EXPR) is Verdict.PROVED_EQUAL


def test_05_nepal_ratio_with_independent_oracle():
    with criterion(5, "nepal ratio begins 0.820 and matches a 200-digit oracle to 50 digits"):
        ratio = nepal_ratio_expr()
        assert truncated_str(ratio, 3) == "0.820"
        # separately coded oracle: 200-digit decimal floating point,
        # evaluated straight from the printed formula
        with localcontext() as ctx:
            ctx.prec = 200
            root2 = Decimal(2).sqrt()
            shared = (297 - 180 * root2) / (92 - 36 * root2)
            numerator = 24 + shared * (
                1 + (8 - 3 * root2) / ((118 - 48 * root2).sqrt() - 6)
            )
            denominator = 32 + shared * (
                1 + 6 / ((8 - 3 * root2) * ((1 + 18 / (41 - 24 * root2)).sqrt() - 1))
            )
            oracle = Fraction(numerator / denominator)
        ball = expr_eval(ratio, 700)
        assert ball.radius < Fraction(1, 10**60)
        assert abs(ball.center - oracle) < Fraction(1, 10**50)


def test_06_current_flag_exact_proportions():
    with criterion(6, "current flag: ratio 3/2, star diameter s/2, six-square areas"):
        layout = build_flag("chile-current", 2)
        assert exact_rational(layout.width_height_ratio()) == Fraction(3, 2)
        side = Fraction(2)
        radius = layout.stars[0].pentagram.circumradius
        assert exact_rational(radius) == side / 4  # diameter = side/2
        areas = []
        for region in layout.regions:
            x0, x1, y0, y1 = region.bounds
            areas.append(exact_rational(mul(sub(x1, x0), sub(y1, y0))))
        assert areas == [side**2, 2 * side**2, 3 * side**2]
        canvas_area = exact_rational(mul(layout.canvas.width, layout.canvas.height))
        assert sum(areas) == canvas_area == 6 * side**2


def test_07_angle_configuration_at_two_scales():
    with criterion(7, "angle configuration fully proved at two scales"):
        for scale in (1, Fraction(7, 3)):
            report = verify_angle_configuration(build_independence_flag(scale))
            assert report.checks
            assert report.all_ok
            assert not report.any_undecided


def test_08_pentagram_property_suite():
    with criterion(8, "pentagram: radius ratio (3-sqrt5)/2, equidistance, simplicity"):
        star = Pentagram(Point(lit(0), lit(0)), lit(1))
        vertices = pentagram_vertices(star)
        ratio_expected = div(sub(lit(3), SQRT5_EXPR), lit(2))
        for outer, inner in zip(vertices[0::2], vertices[1::2]):
            outer_d2 = add(square_of(outer.x), square_of(outer.y))
            inner_d2 = add(square_of(inner.x), square_of(inner.y))
            assert verify_identity(outer_d2, lit(1)) is Verdict.PROVED_EQUAL
            assert (
                verify_identity(inner_d2, square_of(ratio_expected))
                is Verdict.PROVED_EQUAL
            )
        turns = []
        for i in range(10):
            a, b, c = vertices[i], vertices[(i + 1) % 10], vertices[(i + 2) % 10]
            cross = sub(
                mul(sub(b.x, a.x), sub(c.y, b.y)), mul(sub(b.y, a.y), sub(c.x, b.x))
            )
            turns.append(certified_sign(cross))
        assert all(s is not Sign.ZERO for s in turns)
        assert all(turns[i] is not turns[(i + 1) % 10] for i in range(10))


def test_09_field_axioms_and_sign_agreement_at_scale():
    with criterion(9, "10,000 field-axiom triples and 10,000 sign agreements under 10 s"):
        started = time.monotonic()
        rng = random.Random(1818)

        def random_golden() -> GoldenNumber:
            return GoldenNumber(
                Fraction(rng.randint(-999, 999), rng.randint(1, 60)),
                Fraction(rng.randint(-999, 999), rng.randint(1, 60)),
            )

        one = GoldenNumber(1, 0)
        for _ in range(10_000):
            x, y, z = random_golden(), random_golden(), random_golden()
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert (x + (-x)).is_zero
            if not x.is_zero:
                assert x * x.inverse() == one
        for _ in range(10_000):
            g = random_golden()
            if g.is_zero:
                continue
            ball_sign = expr_eval(gn_to_expr(g), 64).sign()
            if ball_sign is not None:
                assert ball_sign is gn_sign(g)
        elapsed = time.monotonic() - started
        assert elapsed < 10.0


def test_10_parser_roundtrip_and_fuzz(layouts, spec_sources):
    with criterion(10, "shipped specs match builtins; 1,000 fuzzed inputs are total"):
        for name in BUILTIN_NAMES:
            lowered = lower_source(spec_sources[name])
            builtin = layouts[name]
            pairs = [
                (lowered.canvas.width, builtin.canvas.width),
                (lowered.canvas.height, builtin.canvas.height),
            ]
            for r1, r2 in zip(lowered.regions, builtin.regions):
                for p1, p2 in zip(r1.polygon, r2.polygon):
                    pairs.extend([(p1.x, p2.x), (p1.y, p2.y)])
            for s1, s2 in zip(lowered.stars, builtin.stars):
                pairs.extend(
                    [
                        (s1.pentagram.center.x, s2.pentagram.center.x),
                        (s1.pentagram.center.y, s2.pentagram.center.y),
                        (s1.pentagram.circumradius, s2.pentagram.circumradius),
                    ]
                )
            for left, right in pairs:
                assert compare_values(left, right) is Verdict.PROVED_EQUAL

        from test_roundtrip_fuzz import _assert_total, _mutate

        rng = random.Random(36)
        originals = list(spec_sources.values())
        slowest = 0.0
        for index in range(1000):
            source = _mutate(originals[index % len(originals)], rng)
            started = time.monotonic()
            _assert_total(source)
            slowest = max(slowest, time.monotonic() - started)
        assert slowest < 5.0


def test_11_render_determinism_and_physical_scale(layouts):
    with criterion(11, "byte-identical renders; viewBox 900x600; 2.4 m height within one ulp"):
        for name in BUILTIN_NAMES:
            opts = RenderOptions()
            assert svg_emit(layouts[name], opts) == svg_emit(build_flag(name), opts)
            assert json_emit(layouts[name], opts) == json_emit(build_flag(name), opts)
        svg = svg_emit(layouts["chile-current"], RenderOptions(scale=300)).decode()
        assert 'viewBox="0 0 900 600"' in svg

        opts = RenderOptions(digits=6, target_width=Fraction("2.4"))
        doc = json.loads(json_emit(layouts["chile-1818"], opts))
        assert doc["canvas"]["width"] == "2.4"
        emitted_height = Fraction(doc["canvas"]["height"])
        six_digit_ratio = Fraction(doc["ratio"])
        assert doc["ratio"] == "1.80171"
        one_ulp = Fraction(1, 10**5)
        assert abs(emitted_height - Fraction("2.4") / six_digit_ratio) <= one_ulp
