"""Exact rational kernel: points, squared distances and sign predicates.

Coordinates are :class:`fractions.Fraction`, so every predicate here is
decided without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence, Tuple, Union

RationalLike = Union[int, Fraction, str]


class GeometryError(ValueError):
    """Input violates a geometric precondition."""


class DuplicatePointError(GeometryError):
    pass


def as_fraction(value: RationalLike) -> Fraction:
    # floats are refused: a float has already lost the value it was meant to hold
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational required, got {value!r}")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f"exact rational required, got {value!r}")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __init__(self, x: RationalLike, y: RationalLike):
        object.__setattr__(self, "x", as_fraction(x))
        object.__setattr__(self, "y", as_fraction(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, s: RationalLike) -> "Point":
        s = as_fraction(s)
        return Point(self.x * s, self.y * s)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def squared_distance(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def cross(a: Point, b: Point, c: Point) -> Fraction:
    """(b - a) x (c - a)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orientation(a: Point, b: Point, c: Point) -> int:
    """+1 for a counterclockwise turn a->b->c, -1 for clockwise, 0 if collinear."""
    v = cross(a, b, c)
    return (v > 0) - (v < 0)


def collinear(a: Point, b: Point, c: Point) -> bool:
    return cross(a, b, c) == 0


def check_distinct(points: Sequence[Point]) -> None:
    seen = set()
    for i, p in enumerate(points):
        if p in seen:
            raise DuplicatePointError(f"duplicate point {p} at index {i}")
        seen.add(p)


@dataclass(frozen=True)
class ConvexReport:
    """Outcome of :func:`in_convex_position` for four points.

    ``hull_cycle`` is a counterclockwise ordering of input indices when
    ``convex`` is true. ``collinear_vertex`` names a hull vertex lying on the
    segment between its two neighbours (three collinear points).
    """

    convex: bool
    hull_cycle: Optional[Tuple[int, int, int, int]] = None
    interior_point: Optional[int] = None
    collinear_vertex: Optional[int] = None


def _inside_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    s1, s2, s3 = orientation(a, b, p), orientation(b, c, p), orientation(c, a, p)
    has_neg = s1 < 0 or s2 < 0 or s3 < 0
    has_pos = s1 > 0 or s2 > 0 or s3 > 0
    return not (has_neg and has_pos)


def _between(a: Point, m: Point, b: Point) -> bool:
    # m strictly inside segment ab, all three collinear
    return (min(a.x, b.x) <= m.x <= max(a.x, b.x)) and (
        min(a.y, b.y) <= m.y <= max(a.y, b.y)
    )


def in_convex_position(pts: Sequence[Point]) -> ConvexReport:
    if len(pts) != 4:
        raise GeometryError(f"expected 4 points, got {len(pts)}")
    check_distinct(pts)
    if all(orientation(pts[0], pts[1], p) == 0 for p in pts[2:]):
        raise GeometryError("all four points are collinear")

    # three collinear points: the middle one is a degenerate hull vertex
    for i in range(4):
        others = [j for j in range(4) if j != i]
        a, b, c = (pts[j] for j in others)
        if orientation(a, b, c) == 0:
            for mid in others:
                ends = [j for j in others if j != mid]
                if _between(pts[ends[0]], pts[mid], pts[ends[1]]):
                    off = i
                    cycle = (ends[0], mid, ends[1], off)
                    if orientation(*(pts[j] for j in (ends[0], ends[1], off))) < 0:
                        cycle = (ends[1], mid, ends[0], off)
                    return ConvexReport(True, hull_cycle=_rotate_min(cycle), collinear_vertex=mid)

    for i in range(4):
        a, b, c = (pts[j] for j in range(4) if j != i)
        if _inside_closed_triangle(pts[i], a, b, c):
            return ConvexReport(False, interior_point=i)

    # general convex position: sort the other three by angle around point 0
    rest = [1, 2, 3]
    ordered = [0]
    # for a convex quadrilateral, the vertex opposite 0 is the one that separates the other two
    for j in rest:
        k, m = (r for r in rest if r != j)
        if orientation(pts[0], pts[j], pts[k]) * orientation(pts[0], pts[j], pts[m]) < 0:
            ordered = [0, k, j, m]
            break
    if orientation(pts[ordered[0]], pts[ordered[1]], pts[ordered[2]]) < 0:
        ordered = [ordered[0], ordered[3], ordered[2], ordered[1]]
    return ConvexReport(True, hull_cycle=tuple(ordered))


def _rotate_min(cycle: Tuple[int, ...]) -> Tuple[int, ...]:
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]
