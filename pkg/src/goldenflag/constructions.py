"""Flag construction procedures and their identity verifications.

Four builtin constructions are provided:

* ``chile-1818``: the golden-ratio Independence design: three equal-height
  bands, blue rectangle in height/width proportion tan(36), white band
  phi times wider than the blue one, star centered on the blue
  diagonals' crossing with circumcircle diameter height/phi.
* ``chile-current``: the 3:2 six-square design, star diameter half the
  square side.
* ``togo``: five alternating stripes, golden-mean aspect ratio, red
  canton with an inscribed white star.
* ``nepal-ratio``: the nested-radical width-height ratio, realized as a
  single-region pseudo-flag so it can be rendered and round-tripped
  like the others.

All layouts are validated on construction: axis-aligned regions must
tile the canvas exactly (grid coverage over the certified cut lines)
and every star center must lie inside a region.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    InvalidDimension,
    LayoutError,
    PrecisionExhausted,
    UnknownFlag,
    WrongLayout,
)
from .exactnum import (
    PHI_EXPR,
    SQRT5_EXPR,
    Expr,
    Sign,
    Verdict,
    add,
    as_rational,
    certified_sign,
    compare_values,
    decimal_str,
    div,
    lit,
    mul,
    sqrt_,
    square_of,
    sub,
    truncated_str,
    verify_identity,
)
from .geometry import (
    TAN36,
    TAN72,
    Pentagram,
    Point,
    Rect,
    Segment,
    angle_tangent_with_horizontal,
    rect_diagonal_intersection,
    segment_intersection,
)

BUILTIN_NAMES = ("chile-1818", "chile-current", "togo", "nepal-ratio")


class ColorRole(enum.Enum):
    RED = "red"
    WHITE = "white"
    BLUE = "blue"
    GREEN = "green"
    YELLOW = "yellow"


@dataclass(frozen=True)
class Region:
    """A named, colored axis-aligned rectangular region stored as its
    corner polygon (counterclockwise in the y-up frame)."""

    name: str
    color: ColorRole
    polygon: tuple[Point, ...]
    bounds: tuple[Expr, Expr, Expr, Expr]  # x0, x1, y0, y1

    @staticmethod
    def from_rect(name: str, color: ColorRole, rect: Rect) -> "Region":
        x0, y0 = rect.origin.x, rect.origin.y
        x1, y1 = add(x0, rect.width), add(y0, rect.height)
        return Region(name, color, rect.corners(), (x0, x1, y0, y1))


@dataclass(frozen=True)
class Star:
    color: ColorRole
    pentagram: Pentagram


@dataclass(frozen=True)
class FlagLayout:
    canvas: Rect
    regions: tuple[Region, ...]
    stars: tuple[Star, ...]
    provenance: str

    @staticmethod
    def create(
        canvas: Rect,
        regions: tuple[Region, ...],
        stars: tuple[Star, ...],
        provenance: str,
    ) -> "FlagLayout":
        layout = FlagLayout(canvas, regions, stars, provenance)
        if regions:
            _check_tiling(layout)
        for star in stars:
            _check_star_inside(layout, star)
        return layout

    def width_height_ratio(self) -> Expr:
        return div(self.canvas.width, self.canvas.height)


# ---------------------------------------------------------------------------
# layout invariants


def _certified_distinct_sorted(values: list[Expr]) -> list[Expr]:
    """Deduplicate by proven equality, then sort by certified sign of
    differences.  Any undecidable pair is a layout defect."""
    reps: list[Expr] = []
    for value in values:
        for rep in reps:
            verdict = compare_values(value, rep)
            if verdict is Verdict.PROVED_EQUAL:
                break
            if verdict is Verdict.UNDECIDED:
                raise LayoutError("region cut lines not certified distinct/equal")
        else:
            reps.append(value)
    ordered: list[Expr] = []
    for value in reps:  # insertion sort with a certified comparator
        position = len(ordered)
        for i, existing in enumerate(ordered):
            try:
                sign = certified_sign(sub(value, existing))
            except PrecisionExhausted as exc:
                raise LayoutError("region cut lines not orderable") from exc
            if sign is Sign.NEGATIVE:
                position = i
                break
        ordered.insert(position, value)
    return ordered


def _strictly_between(value: Expr, low: Expr, high: Expr) -> bool:
    return (
        certified_sign(sub(value, low)) is Sign.POSITIVE
        and certified_sign(sub(high, value)) is Sign.POSITIVE
    )


def _check_tiling(layout: FlagLayout) -> None:
    """Axis-aligned tiling check: over the grid of all region/canvas cut
    lines, every cell midpoint must be covered by exactly one region.
    Region edges all lie on cut lines, so midpoint coverage decides both
    interior-disjointness and the exact area identity."""
    canvas = layout.canvas
    cx0, cy0 = canvas.origin.x, canvas.origin.y
    cx1, cy1 = add(cx0, canvas.width), add(cy0, canvas.height)
    xs: list[Expr] = [cx0, cx1]
    ys: list[Expr] = [cy0, cy1]
    for region in layout.regions:
        x0, x1, y0, y1 = region.bounds
        xs.extend((x0, x1))
        ys.extend((y0, y1))
    xs = _certified_distinct_sorted(xs)
    ys = _certified_distinct_sorted(ys)
    for i in range(len(xs) - 1):
        mid_x = div(add(xs[i], xs[i + 1]), lit(2))
        for j in range(len(ys) - 1):
            mid_y = div(add(ys[j], ys[j + 1]), lit(2))
            covering = sum(
                1
                for region in layout.regions
                if _strictly_between(mid_x, region.bounds[0], region.bounds[1])
                and _strictly_between(mid_y, region.bounds[2], region.bounds[3])
            )
            if covering == 0:
                raise LayoutError("regions leave a gap in the canvas")
            if covering > 1:
                raise LayoutError("regions overlap")


def _check_star_inside(layout: FlagLayout, star: Star) -> None:
    center = star.pentagram.center
    for region in layout.regions:
        x0, x1, y0, y1 = region.bounds
        try:
            inside = (
                certified_sign(sub(center.x, x0)).is_nonnegative
                and certified_sign(sub(x1, center.x)).is_nonnegative
                and certified_sign(sub(center.y, y0)).is_nonnegative
                and certified_sign(sub(y1, center.y)).is_nonnegative
            )
        except PrecisionExhausted:
            continue
        if inside:
            return
    raise LayoutError("star center lies in no region")


# ---------------------------------------------------------------------------
# builders


def _positive_param(value: int | str | Fraction, what: str) -> Fraction:
    q = as_rational(value)
    if q <= 0:
        raise InvalidDimension(f"{what} must be positive, got {q}")
    return q


def build_independence_flag(region_height: int | str | Fraction = 1) -> FlagLayout:
    """The 1818 golden-ratio construction.

    With band height h: the blue rectangle has height/width tan(36), the
    white band is phi times wider, the red band spans the full width
    below, and the white star sits on the blue diagonals' crossing with
    circumcircle diameter h/phi.
    """
    h = _positive_param(region_height, "region height")
    hx = lit(h)
    blue_width = div(hx, TAN36)
    white_width = mul(PHI_EXPR, blue_width)
    canvas_width = add(blue_width, white_width)
    canvas = Rect(Point(lit(0), lit(0)), canvas_width, lit(2 * h))
    blue_rect = Rect(Point(lit(0), hx), blue_width, hx)
    white_rect = Rect(Point(blue_width, hx), white_width, hx)
    red_rect = Rect(Point(lit(0), lit(0)), canvas_width, hx)
    star_center = rect_diagonal_intersection(blue_rect)
    diameter = div(hx, PHI_EXPR)
    star = Star(ColorRole.WHITE, Pentagram(star_center, div(diameter, lit(2))))
    regions = (
        Region.from_rect("blue_field", ColorRole.BLUE, blue_rect),
        Region.from_rect("white_field", ColorRole.WHITE, white_rect),
        Region.from_rect("red_band", ColorRole.RED, red_rect),
    )
    return FlagLayout.create(canvas, regions, (star,), "chile-1818")


def build_current_flag(square_side: int | str | Fraction = 1) -> FlagLayout:
    """The 3:2 six-square design: blue square in the upper hoist, white
    2x1 beside it, red 3x1 below, star diameter half the square side."""
    s = _positive_param(square_side, "square side")
    canvas = Rect(Point(lit(0), lit(0)), lit(3 * s), lit(2 * s))
    blue_rect = Rect(Point(lit(0), lit(s)), lit(s), lit(s))
    white_rect = Rect(Point(lit(s), lit(s)), lit(2 * s), lit(s))
    red_rect = Rect(Point(lit(0), lit(0)), lit(3 * s), lit(s))
    star_center = rect_diagonal_intersection(blue_rect)
    star = Star(ColorRole.WHITE, Pentagram(star_center, lit(s / 4)))
    regions = (
        Region.from_rect("blue_canton", ColorRole.BLUE, blue_rect),
        Region.from_rect("white_field", ColorRole.WHITE, white_rect),
        Region.from_rect("red_band", ColorRole.RED, red_rect),
    )
    return FlagLayout.create(canvas, regions, (star,), "chile-current")


def build_togo(height: int | str | Fraction = 1) -> FlagLayout:
    """Golden-mean aspect ratio: width = phi * height, five equal
    stripes (green outermost), red canton square of three stripe
    heights, white star inscribed on the canton center with diameter
    4/5 of the canton side."""
    h = _positive_param(height, "height")
    width = mul(PHI_EXPR, lit(h))
    stripe = h / 5
    canton_side = 3 * stripe
    canvas = Rect(Point(lit(0), lit(0)), width, lit(h))
    canton_rect = Rect(Point(lit(0), lit(2 * stripe)), lit(canton_side), lit(canton_side))
    regions = [Region.from_rect("canton", ColorRole.RED, canton_rect)]
    stripe_colors = (
        ColorRole.GREEN,
        ColorRole.YELLOW,
        ColorRole.GREEN,
        ColorRole.YELLOW,
        ColorRole.GREEN,
    )
    # stripes count from the top (high y); the top three sit beside the canton
    for index, color in enumerate(stripe_colors):
        y = lit(h - (index + 1) * stripe)
        if index < 3:
            rect = Rect(Point(lit(canton_side), y), sub(width, lit(canton_side)), lit(stripe))
        else:
            rect = Rect(Point(lit(0), y), width, lit(stripe))
        regions.append(Region.from_rect(f"stripe{index + 1}", color, rect))
    star_center = Point(lit(canton_side / 2), lit(2 * stripe + canton_side / 2))
    star = Star(
        ColorRole.WHITE,
        Pentagram(star_center, lit(Fraction(4, 5) * canton_side / 2)),
    )
    return FlagLayout.create(canvas, tuple(regions), (star,), "togo")


@lru_cache(maxsize=1)
def nepal_ratio_expr() -> Expr:
    """The nested-radical width-height ratio, as a DAG with shared
    subterms; every radicand and divisor is certified on construction."""
    root2 = sqrt_(lit(2))
    common = div(sub(lit(297), mul(lit(180), root2)), sub(lit(92), mul(lit(36), root2)))
    eight_less = sub(lit(8), mul(lit(3), root2))
    numerator = add(
        lit(24),
        mul(
            common,
            add(lit(1), div(eight_less, sub(sqrt_(sub(lit(118), mul(lit(48), root2))), lit(6)))),
        ),
    )
    denominator = add(
        lit(32),
        mul(
            common,
            add(
                lit(1),
                div(
                    lit(6),
                    mul(
                        eight_less,
                        sub(
                            sqrt_(add(lit(1), div(lit(18), sub(lit(41), mul(lit(24), root2))))),
                            lit(1),
                        ),
                    ),
                ),
            ),
        ),
    )
    return div(numerator, denominator)


def build_nepal_ratio(height: int | str | Fraction = 1) -> FlagLayout:
    """Ratio-only pseudo-flag: one red field whose width-height
    proportion is the nested-radical ratio."""
    h = _positive_param(height, "height")
    width = mul(nepal_ratio_expr(), lit(h))
    canvas = Rect(Point(lit(0), lit(0)), width, lit(h))
    field = Region.from_rect("field", ColorRole.RED, Rect(Point(lit(0), lit(0)), width, lit(h)))
    return FlagLayout.create(canvas, (field,), (), "nepal-ratio")


_BUILDERS = {
    "chile-1818": build_independence_flag,
    "chile-current": build_current_flag,
    "togo": build_togo,
    "nepal-ratio": build_nepal_ratio,
}


def build_flag(name: str, size: int | str | Fraction = 1) -> FlagLayout:
    """Build a builtin flag at the given size parameter (band height,
    square side, or flag height, depending on the construction)."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownFlag(f"unknown builtin flag {name!r}") from None
    return builder(size)


# ---------------------------------------------------------------------------
# verification


class CheckStatus(enum.Enum):
    PROVED_EQUAL = "ProvedEqual"
    PROVED_UNEQUAL = "ProvedUnequal"
    UNDECIDED = "Undecided"
    PASS = "Pass"
    FAIL = "Fail"

    @property
    def ok(self) -> bool:
        return self in (CheckStatus.PROVED_EQUAL, CheckStatus.PASS)

    @property
    def label(self) -> str:
        return self.value

    @staticmethod
    def from_verdict(verdict: Verdict) -> "CheckStatus":
        return CheckStatus(verdict.label)


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    subject: str
    checks: tuple[Check, ...]

    @property
    def all_ok(self) -> bool:
        return all(check.status.ok for check in self.checks)

    @property
    def any_undecided(self) -> bool:
        return any(check.status is CheckStatus.UNDECIDED for check in self.checks)


def _identity_check(name: str, lhs: Expr, rhs: Expr, detail: str = "") -> Check:
    verdict = verify_identity(lhs, rhs)
    return Check(name, CheckStatus.from_verdict(verdict), detail)


def _region_by_color(layout: FlagLayout, color: ColorRole) -> Region:
    for region in layout.regions:
        if region.color is color:
            return region
    raise WrongLayout(f"layout has no {color.value} region")


def _region_size(region: Region) -> tuple[Expr, Expr]:
    x0, x1, y0, y1 = region.bounds
    return sub(x1, x0), sub(y1, y0)


def _squared_distance(a: Point, b: Point) -> Expr:
    return add(square_of(sub(a.x, b.x)), square_of(sub(a.y, b.y)))


def verify_angle_configuration(layout: FlagLayout) -> VerificationReport:
    """Certify the angle configuration of the Independence blue
    rectangle: diagonal slopes of tan(36), a crossing angle of tan(72)
    (checked against both the closed form and the exact double-angle
    form), the vertical complement, and the isosceles half-diagonal
    triangle.  Raises :class:`WrongLayout` for any layout whose blue
    region is not in that proportion."""
    try:
        blue = _region_by_color(layout, ColorRole.BLUE)
    except WrongLayout:
        raise WrongLayout("layout has no blue rectangle with diagonals") from None
    width, height = _region_size(blue)
    proportion = verify_identity(div(height, width), TAN36)
    if proportion is not Verdict.PROVED_EQUAL:
        raise WrongLayout(
            "blue rectangle is not in the tan(36) height/width proportion"
        )
    x0, x1, y0, y1 = blue.bounds
    corner00, corner10 = Point(x0, y0), Point(x1, y0)
    corner11, corner01 = Point(x1, y1), Point(x0, y1)
    diag1 = Segment(corner00, corner11)
    diag2 = Segment(corner01, corner10)
    tangent1 = angle_tangent_with_horizontal(diag1)
    tangent2 = angle_tangent_with_horizontal(diag2)
    checks = [
        _identity_check("rising diagonal tangent equals tan(36)", tangent1, TAN36),
        _identity_check("falling diagonal tangent equals tan(36)", tangent2, TAN36),
    ]
    # crossing angle between the two diagonals: |(m1 - m2)/(1 + m1 m2)|
    slope1 = div(sub(corner11.y, corner00.y), sub(corner11.x, corner00.x))
    slope2 = div(sub(corner10.y, corner01.y), sub(corner10.x, corner01.x))
    crossing = div(sub(slope1, slope2), add(lit(1), mul(slope1, slope2)))
    checks.append(
        _identity_check(
            "diagonal crossing tangent equals tan(72) closed form", crossing, TAN72
        )
    )
    double_angle = div(mul(lit(2), TAN36), sub(lit(1), mul(TAN36, TAN36)))
    checks.append(
        _identity_check(
            "crossing tangent equals double-angle form 2t/(1-t^2)",
            crossing,
            double_angle,
        )
    )
    # complement: the diagonal meets the vertical at the complementary
    # angle, whose tangent is the reciprocal of tan(36)
    complement = div(sub(corner11.x, corner00.x), sub(corner11.y, corner00.y))
    checks.append(
        _identity_check(
            "diagonal-vertical complement satisfies tan(36)*tan(54) = 1",
            mul(tangent1, complement),
            lit(1),
        )
    )
    center = segment_intersection(diag1, diag2)
    half1 = _squared_distance(center, corner01)
    half2 = _squared_distance(center, corner11)
    checks.append(
        _identity_check(
            "half-diagonals to the top side are equal (isosceles 36-72-72)",
            half1,
            half2,
        )
    )
    reference = rect_diagonal_intersection(
        Rect(Point(x0, y0), width, height)
    )
    agree_x = compare_values(center.x, reference.x)
    agree_y = compare_values(center.y, reference.y)
    both = (
        CheckStatus.PROVED_EQUAL
        if agree_x is Verdict.PROVED_EQUAL and agree_y is Verdict.PROVED_EQUAL
        else CheckStatus.FAIL
    )
    checks.append(Check("diagonal intersection matches midpoint formula", both))
    if layout.stars:
        star_center = layout.stars[0].pentagram.center
        star_x = compare_values(star_center.x, center.x)
        star_y = compare_values(star_center.y, center.y)
        status = (
            CheckStatus.PROVED_EQUAL
            if star_x is Verdict.PROVED_EQUAL and star_y is Verdict.PROVED_EQUAL
            else CheckStatus.FAIL
        )
        checks.append(Check("star centered on the diagonal crossing", status))
    return VerificationReport(layout.provenance, tuple(checks))


def _verify_independence(layout: FlagLayout) -> VerificationReport:
    blue = _region_by_color(layout, ColorRole.BLUE)
    white = _region_by_color(layout, ColorRole.WHITE)
    blue_width, blue_height = _region_size(blue)
    white_width, _ = _region_size(white)
    ratio = layout.width_height_ratio()
    ratio_closed_form = div(
        add(lit(2), SQRT5_EXPR), sqrt_(sub(lit(10), mul(lit(2), SQRT5_EXPR)))
    )
    diameter = mul(lit(2), layout.stars[0].pentagram.circumradius)
    checks = (
        _identity_check(
            "white/blue width ratio equals the golden mean",
            div(white_width, blue_width),
            PHI_EXPR,
        ),
        _identity_check(
            "blue height/width proportion equals tan(36)",
            div(blue_height, blue_width),
            TAN36,
        ),
        _identity_check(
            "canvas width/height ratio equals (2+sqrt5)/sqrt(10-2*sqrt5)",
            ratio,
            ratio_closed_form,
            detail=f"ratio = {decimal_str(ratio, 6)}",
        ),
        _identity_check(
            "band height over star circumcircle diameter equals the golden mean",
            div(blue_height, diameter),
            PHI_EXPR,
        ),
        _identity_check(
            "top width over white width equals the golden mean",
            div(add(blue_width, white_width), white_width),
            PHI_EXPR,
        ),
    )
    return VerificationReport(layout.provenance, checks)


def _verify_current(layout: FlagLayout) -> VerificationReport:
    blue = _region_by_color(layout, ColorRole.BLUE)
    side, _ = _region_size(blue)
    ratio = layout.width_height_ratio()
    diameter = mul(lit(2), layout.stars[0].pentagram.circumradius)
    area_checks = []
    for region, squares in zip(layout.regions, (1, 2, 3)):
        w, h = _region_size(region)
        area_checks.append(
            verify_identity(mul(w, h), mul(lit(squares), mul(side, side)))
        )
    canvas_area = mul(layout.canvas.width, layout.canvas.height)
    area_checks.append(verify_identity(canvas_area, mul(lit(6), mul(side, side))))
    decomposition_ok = all(v is Verdict.PROVED_EQUAL for v in area_checks)
    checks = (
        _identity_check(
            "canvas width/height proportion is exactly 3:2", ratio, lit(Fraction(3, 2))
        ),
        _identity_check(
            "star circumcircle diameter is half the square side",
            diameter,
            div(side, lit(2)),
        ),
        Check(
            "six-square decomposition: areas 1+2+3 squares tile the canvas",
            CheckStatus.PASS if decomposition_ok else CheckStatus.FAIL,
            "blue=1, white=2, red=3 square areas; sum equals canvas area",
        ),
    )
    return VerificationReport(layout.provenance, checks)


def _verify_togo(layout: FlagLayout) -> VerificationReport:
    ratio = layout.width_height_ratio()
    checks = (
        _identity_check(
            "canvas width/height ratio equals the golden mean",
            ratio,
            PHI_EXPR,
            detail=f"ratio = {decimal_str(ratio, 6)}",
        ),
    )
    return VerificationReport(layout.provenance, checks)


def _verify_nepal(layout: FlagLayout) -> VerificationReport:
    ratio = layout.width_height_ratio()
    leading = truncated_str(ratio, 3)
    status = CheckStatus.PASS if leading == "0.820" else CheckStatus.FAIL
    checks = (
        Check(
            "width-height ratio decimal expansion begins 0.820",
            status,
            f"ratio = {decimal_str(ratio, 6)}",
        ),
    )
    return VerificationReport(layout.provenance, checks)


def _verify_generic(layout: FlagLayout) -> VerificationReport:
    # construction already validated tiling and star containment
    checks = (
        Check("regions tile the canvas exactly", CheckStatus.PASS),
        Check("star centers lie inside regions", CheckStatus.PASS),
        Check(
            "canvas ratio evaluates",
            CheckStatus.PASS,
            f"ratio = {decimal_str(layout.width_height_ratio(), 6)}",
        ),
    )
    return VerificationReport(layout.provenance, checks)


_LAYOUT_SUITES = {
    "chile-1818": _verify_independence,
    "chile-current": _verify_current,
    "togo": _verify_togo,
    "nepal-ratio": _verify_nepal,
}


def verify_layout_identities(layout: FlagLayout) -> VerificationReport:
    """Run the identity suite matching the layout's provenance; layouts
    from unrecognized sources get the generic structural report."""
    suite = _LAYOUT_SUITES.get(layout.provenance, _verify_generic)
    return suite(layout)


def verify_flag_identities(name: str) -> VerificationReport:
    """Every identity stated for the named builtin flag, run against a
    freshly built layout."""
    if name not in BUILTIN_NAMES:
        raise UnknownFlag(f"unknown builtin flag {name!r}")
    return verify_layout_identities(build_flag(name))
