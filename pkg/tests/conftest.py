from __future__ import annotations

import importlib.resources
from decimal import Decimal, localcontext
from fractions import Fraction

import pytest

from goldenflag.constructions import BUILTIN_NAMES, build_flag


@pytest.fixture(scope="session")
def layouts():
    """One default-size layout per builtin, built once."""
    return {name: build_flag(name) for name in BUILTIN_NAMES}


@pytest.fixture(scope="session")
def spec_sources():
    """Shipped .flag sources keyed by builtin name."""
    package = importlib.resources.files("goldenflag") / "specs"
    return {
        name: (package / f"{name}.flag").read_text(encoding="utf-8")
        for name in BUILTIN_NAMES
    }


def decimal_oracle_tan36(digits: int = 50) -> Fraction:
    """Independent high-precision value of sqrt(10-2*sqrt5)/(1+sqrt5),
    computed with the decimal module (different algorithm and code path
    from the interval engine)."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        root5 = Decimal(5).sqrt()
        value = (10 - 2 * root5).sqrt() / (1 + root5)
        return Fraction(value)


def decimal_oracle_ratio(digits: int = 50) -> Fraction:
    """Independent value of (2+sqrt5)/sqrt(10-2*sqrt5)."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        root5 = Decimal(5).sqrt()
        value = (2 + root5) / (10 - 2 * root5).sqrt()
        return Fraction(value)
