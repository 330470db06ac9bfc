"""Taxonomy of four-point sets and the triangle lower bound of each case."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from distinct_triangles.geometry import Point, in_convex_position, squared_distance


class QuadTag(str, enum.Enum):
    NOT_CONVEX = "NotConvex"
    THREE_COLLINEAR = "ThreeCollinear"
    ALL_SIDES_DISTINCT = "AllSidesDistinct"
    ONE_PAIR_ADJACENT = "OnePairAdjacent"
    ONE_PAIR_OPPOSITE = "OnePairOpposite"
    KITE = "Kite"
    PARALLELOGRAM = "Parallelogram"
    THREE_SIDES_CONGRUENT = "ThreeSidesCongruent"
    RHOMBUS = "Rhombus"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QuadCase:
    """A case tag plus refinement flags.

    ``is_rectangle`` / ``is_square`` are meaningful for Parallelogram and
    Rhombus. ``is_isosceles_trapezoid`` is meaningful for OnePairOpposite:
    the congruent opposite sides are the legs of an isosceles trapezoid
    (equal diagonals), which determines only two triangles.
    """

    tag: QuadTag
    is_rectangle: bool = False
    is_square: bool = False
    is_isosceles_trapezoid: bool = False

    def __str__(self) -> str:
        flags = [name for name in ("is_rectangle", "is_square", "is_isosceles_trapezoid") if getattr(self, name)]
        return f"{self.tag.value}({', '.join(flags)})" if flags else self.tag.value


@dataclass(frozen=True)
class CaseBound:
    case: QuadTag
    min_distinct_triangles: int


def classify_quad(pts: Sequence[Point]) -> QuadCase:
    report = in_convex_position(pts)  # validates count, duplicates, all-collinear
    if not report.convex:
        return QuadCase(QuadTag.NOT_CONVEX)
    if report.collinear_vertex is not None:
        return QuadCase(QuadTag.THREE_COLLINEAR)

    c = [pts[i] for i in report.hull_cycle]
    sides = [squared_distance(c[i], c[(i + 1) % 4]) for i in range(4)]
    diagonals_equal = squared_distance(c[0], c[2]) == squared_distance(c[1], c[3])
    distinct = len(set(sides))

    if distinct == 1:
        return QuadCase(QuadTag.RHOMBUS, is_rectangle=diagonals_equal, is_square=diagonals_equal)
    if distinct == 4:
        return QuadCase(QuadTag.ALL_SIDES_DISTINCT)
    if distinct == 2:
        if sides.count(sides[0]) in (1, 3):
            return QuadCase(QuadTag.THREE_SIDES_CONGRUENT)
        if sides[0] == sides[2]:
            return QuadCase(QuadTag.PARALLELOGRAM, is_rectangle=diagonals_equal)
        return QuadCase(QuadTag.KITE)
    # exactly one congruent pair
    for i in range(4):
        if sides[i] == sides[(i + 1) % 4]:
            return QuadCase(QuadTag.ONE_PAIR_ADJACENT)
    return QuadCase(QuadTag.ONE_PAIR_OPPOSITE, is_isosceles_trapezoid=diagonals_equal)


_BOUNDS = {
    QuadTag.ALL_SIDES_DISTINCT: 3,
    QuadTag.ONE_PAIR_ADJACENT: 3,
    QuadTag.ONE_PAIR_OPPOSITE: 3,
    QuadTag.KITE: 3,
    QuadTag.NOT_CONVEX: 2,
    QuadTag.THREE_COLLINEAR: 2,
    QuadTag.THREE_SIDES_CONGRUENT: 2,
}


def case_bound(case: QuadCase) -> CaseBound:
    tag = case.tag
    if tag is QuadTag.PARALLELOGRAM:
        return CaseBound(tag, 1 if case.is_rectangle else 2)
    if tag is QuadTag.RHOMBUS:
        return CaseBound(tag, 1 if case.is_square else 2)
    if tag is QuadTag.ONE_PAIR_OPPOSITE and case.is_isosceles_trapezoid:
        return CaseBound(tag, 2)
    return CaseBound(tag, _BOUNDS[tag])
