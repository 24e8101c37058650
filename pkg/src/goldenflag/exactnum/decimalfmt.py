"""Certified decimal rendering of exact values.

Two policies are provided:

* :func:`decimal_str` rounds half-even to a number of significant
  digits.  The printed string is certified: the whole enclosing ball
  rounds to the same digits, so the exact value is within half an ulp
  of the output.  Exact rationals short-circuit through integer
  arithmetic (which also resolves ties exactly); provably irrational
  values can never tie, so interval refinement terminates.
* :func:`truncated_str` emits a certified *truncation* to a fixed
  number of decimal places (the style used for quoting leading digits).

Both are pure integer/rational computations: output bytes are identical
across platforms and runs.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import PrecisionExhausted
from . import interval as iv
from .expr import Expr, eval_interval, exact_rational

_Rounded = tuple[bool, int, int]  # (negative, digits-as-int, decimal exponent)


def _decimal_magnitude(value: Fraction) -> int:
    """The unique d with 10**(d-1) <= |value| < 10**d."""
    num, den = abs(value).numerator, abs(value).denominator

    def below_pow10(exp: int) -> bool:
        if exp >= 0:
            return num < den * 10**exp
        return num * 10**-exp < den

    d = len(str(num)) - len(str(den)) + 1
    while not below_pow10(d):
        d += 1
    while below_pow10(d - 1):
        d -= 1
    return d


def round_significant(value: Fraction, digits: int) -> _Rounded:
    """Round half-even to ``digits`` significant decimal digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if value == 0:
        return False, 0, 0
    negative = value < 0
    mag = abs(value)
    d = _decimal_magnitude(mag)
    # scale into [10**(digits-1), 10**digits) and round to an integer
    shift = digits - d
    if shift >= 0:
        num = mag.numerator * 10**shift
        den = mag.denominator
    else:
        num = mag.numerator
        den = mag.denominator * 10**-shift
    q, rem = divmod(num, den)
    doubled = 2 * rem
    if doubled > den or (doubled == den and q % 2 == 1):
        q += 1
    if q == 10**digits:  # carried into the next decade
        q //= 10
        d += 1
    return negative, q, d


def format_rounded(rounded: _Rounded, digits: int) -> str:
    """Plain decimal string; trailing fractional zeros are trimmed."""
    negative, q, d = rounded
    if q == 0:
        return "0"
    body = str(q).rjust(digits, "0")
    if d >= digits:
        int_part = body + "0" * (d - digits)
        frac_part = ""
    elif d > 0:
        int_part = body[:d]
        frac_part = body[d:]
    else:
        int_part = "0"
        frac_part = "0" * -d + body
    frac_part = frac_part.rstrip("0")
    text = int_part if not frac_part else f"{int_part}.{frac_part}"
    return "-" + text if negative else text


def round_fraction_str(value: Fraction, digits: int) -> str:
    return format_rounded(round_significant(value, digits), digits)


def _refinement_schedule(digits: int, min_bits: int):
    w = max(64, min_bits, 4 * digits + 32)
    cap = max(4096, 64 * (4 * digits + 32), 4 * min_bits if min_bits else 0)
    while w <= cap:
        yield w
        w *= 2


def decimal_str(x: Expr, digits: int, min_bits: int = 0) -> str:
    """Certified round-half-even rendering with significant digits.

    ``min_bits`` forces the starting working precision upward (used by
    re-evaluation tests); it never changes the output of a certified
    rounding, only how soon certification happens.
    """
    exact = exact_rational(x)
    if exact is not None:
        return round_fraction_str(exact, digits)
    for w in _refinement_schedule(digits, min_bits):
        try:
            lo_hi = eval_interval(x, w)
        except iv.StraddlesZero:
            continue
        lo, hi = iv.to_fractions(lo_hi, w)
        r_lo = round_significant(lo, digits)
        r_hi = round_significant(hi, digits)
        if r_lo == r_hi:
            return format_rounded(r_lo, digits)
    raise PrecisionExhausted("interval never certified a rounding")


def truncated_str(x: Expr, places: int) -> str:
    """Certified truncation of a nonnegative value to ``places`` decimal
    places: the first digits of the decimal expansion, never rounded."""
    if places < 1:
        raise ValueError("places must be >= 1")
    exact = exact_rational(x)
    if exact is not None:
        if exact < 0:
            raise ValueError("truncation is defined for nonnegative values")
        scaled = (exact.numerator * 10**places) // exact.denominator
        return _format_truncated(scaled, places)
    for w in _refinement_schedule(places, 0):
        try:
            lo_hi = eval_interval(x, w)
        except iv.StraddlesZero:
            continue
        lo, hi = iv.to_fractions(lo_hi, w)
        if lo < 0:
            raise ValueError("truncation is defined for nonnegative values")
        t_lo = (lo.numerator * 10**places) // lo.denominator
        t_hi = (hi.numerator * 10**places) // hi.denominator
        if t_lo == t_hi:
            return _format_truncated(t_lo, places)
    raise PrecisionExhausted("interval never pinned the truncated digits")


def _format_truncated(scaled: int, places: int) -> str:
    int_part, frac = divmod(scaled, 10**places)
    return f"{int_part}.{str(frac).rjust(places, '0')}"
