"""Exact planar primitives: points, rectangles, segments, pentagrams.

Coordinates are constructible-number expressions in a y-up mathematical
frame (the render layer flips to screen orientation).  Angular facts are
never stored in degrees: they are encoded as exact tangents and chord
lengths, which keeps everything inside constructible arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    DegenerateSegment,
    InvalidDimension,
    OutsideSegment,
    ParallelOrUndecided,
    PrecisionExhausted,
    VerticalSegment,
)
from .exactnum import (
    PHI_EXPR,
    SQRT5_EXPR,
    Expr,
    Sign,
    Verdict,
    add,
    certified_sign,
    compare_values,
    div,
    lit,
    mul,
    neg,
    sqrt_,
    sub,
)

# Exact pentagon trigonometry, shared as common subterms:
#   cos 36 = phi/2          sin 36 = sqrt(10 - 2 sqrt5)/4
#   cos 72 = (phi - 1)/2    sin 72 = sqrt(10 + 2 sqrt5)/4
COS36 = div(PHI_EXPR, lit(2))
SIN36 = div(sqrt_(sub(lit(10), mul(lit(2), SQRT5_EXPR))), lit(4))
COS72 = div(sub(PHI_EXPR, lit(1)), lit(2))
SIN72 = div(sqrt_(add(lit(10), mul(lit(2), SQRT5_EXPR))), lit(4))

# The two closed forms used throughout the flag constructions.
TAN36 = div(sqrt_(sub(lit(10), mul(lit(2), SQRT5_EXPR))), add(lit(1), SQRT5_EXPR))
TAN72 = div(sqrt_(add(lit(10), mul(lit(2), SQRT5_EXPR))), sub(SQRT5_EXPR, lit(1)))


@dataclass(frozen=True)
class Point:
    x: Expr
    y: Expr


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle spanning ``[x, x+width] x [y, y+height]``.

    ``origin`` is the corner with the smallest coordinates in the
    internal y-up frame (it becomes the top-left corner once the render
    flip is applied to the opposite edge).  Width and height must be
    certified positive.
    """

    origin: Point
    width: Expr
    height: Expr

    def __post_init__(self) -> None:
        for name, dim in (("width", self.width), ("height", self.height)):
            try:
                sign = certified_sign(dim)
            except PrecisionExhausted as exc:
                raise InvalidDimension(f"{name} sign not certified") from exc
            if sign is not Sign.POSITIVE:
                raise InvalidDimension(f"{name} is not certified positive")

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Counterclockwise corners starting at the origin corner."""
        x0, y0 = self.origin.x, self.origin.y
        x1 = add(x0, self.width)
        y1 = add(y0, self.height)
        return (
            Point(x0, y0),
            Point(x1, y0),
            Point(x1, y1),
            Point(x0, y1),
        )


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self) -> None:
        # p != q must be certified: some coordinate pair provably differs.
        for a, b in ((self.p.x, self.q.x), (self.p.y, self.q.y)):
            if compare_values(a, b) is Verdict.PROVED_UNEQUAL:
                return
        raise DegenerateSegment("endpoints not certified distinct")


class Orientation(enum.Enum):
    POINT_UP = "PointUp"


@dataclass(frozen=True)
class Pentagram:
    center: Point
    circumradius: Expr
    orientation: Orientation = Orientation.POINT_UP

    def __post_init__(self) -> None:
        try:
            sign = certified_sign(self.circumradius)
        except PrecisionExhausted as exc:
            raise InvalidDimension("circumradius sign not certified") from exc
        if sign is not Sign.POSITIVE:
            raise InvalidDimension("circumradius is not certified positive")


def rect_diagonal_intersection(r: Rect) -> Point:
    """The crossing point of the two diagonals: origin + half the size."""
    return Point(
        add(r.origin.x, div(r.width, lit(2))),
        add(r.origin.y, div(r.height, lit(2))),
    )


def _cross(ax: Expr, ay: Expr, bx: Expr, by: Expr) -> Expr:
    return sub(mul(ax, by), mul(ay, bx))


def segment_intersection(s1: Segment, s2: Segment) -> Point:
    """Exact intersection point of two non-parallel segments.

    The crossing of the supporting lines is computed exactly and then
    certified to lie within both segments' bounding boxes.  Raises
    :class:`ParallelOrUndecided` when the direction cross product's sign
    cannot be certified nonzero, and :class:`OutsideSegment` when box
    containment fails (or cannot be certified).
    """
    d1x, d1y = sub(s1.q.x, s1.p.x), sub(s1.q.y, s1.p.y)
    d2x, d2y = sub(s2.q.x, s2.p.x), sub(s2.q.y, s2.p.y)
    denom = _cross(d1x, d1y, d2x, d2y)
    try:
        if certified_sign(denom) is Sign.ZERO:
            raise ParallelOrUndecided("segments are parallel")
    except PrecisionExhausted as exc:
        raise ParallelOrUndecided("parallelism not certified") from exc
    t = div(_cross(sub(s2.p.x, s1.p.x), sub(s2.p.y, s1.p.y), d2x, d2y), denom)
    point = Point(add(s1.p.x, mul(t, d1x)), add(s1.p.y, mul(t, d1y)))
    for seg in (s1, s2):
        _certify_in_box(point, seg)
    return point


def _certify_in_box(point: Point, seg: Segment) -> None:
    # v lies between a and b  iff  (v-a)(v-b) <= 0; exact and order-free.
    for v, a, b in (
        (point.x, seg.p.x, seg.q.x),
        (point.y, seg.p.y, seg.q.y),
    ):
        witness = mul(sub(v, a), sub(v, b))
        try:
            sign = certified_sign(witness)
        except PrecisionExhausted as exc:
            raise OutsideSegment("containment not certified") from exc
        if sign is Sign.POSITIVE:
            raise OutsideSegment("intersection outside segment bounding box")


def angle_tangent_with_horizontal(s: Segment) -> Expr:
    """|dy|/|dx| as an exact expression; the angle itself is never
    materialized in degrees."""
    dx = sub(s.q.x, s.p.x)
    dy = sub(s.q.y, s.p.y)
    sign_dx = certified_sign(dx)
    if sign_dx is Sign.ZERO:
        raise VerticalSegment("tangent undefined for a vertical segment")
    abs_dx = dx if sign_dx is Sign.POSITIVE else neg(dx)
    sign_dy = certified_sign(dy)
    if sign_dy is Sign.ZERO:
        return lit(0)
    abs_dy = dy if sign_dy is Sign.POSITIVE else neg(dy)
    return div(abs_dy, abs_dx)


# Unit vectors for the ten boundary directions of a point-up {5/2} star,
# counterclockwise from the topmost outer vertex (outer vertices on the
# circumcircle, inner vertices at circumradius/phi^2).
_OUTER_UNIT = (
    (lit(0), lit(1)),
    (neg(SIN72), COS72),
    (neg(SIN36), neg(COS36)),
    (SIN36, neg(COS36)),
    (SIN72, COS72),
)
_INNER_UNIT = (
    (neg(SIN36), COS36),
    (neg(SIN72), neg(COS72)),
    (lit(0), lit(-1)),
    (SIN72, neg(COS72)),
    (SIN36, COS36),
)


def pentagram_vertices(star: Pentagram) -> list[Point]:
    """The ten boundary vertices of the star as a simple concave
    decagon, counterclockwise, alternating outer/inner and starting at
    the topmost outer vertex."""
    inner_radius = div(star.circumradius, mul(PHI_EXPR, PHI_EXPR))
    cx, cy = star.center.x, star.center.y
    vertices: list[Point] = []
    for k in range(5):
        for radius, (ux, uy) in (
            (star.circumradius, _OUTER_UNIT[k]),
            (inner_radius, _INNER_UNIT[k]),
        ):
            vertices.append(
                Point(add(cx, mul(radius, ux)), add(cy, mul(radius, uy)))
            )
    return vertices
