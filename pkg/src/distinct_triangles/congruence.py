"""Triangle congruence classes and whole-configuration congruence.

Triangles are compared side-side-side on exact squared lengths. Whole point
sets are compared by constructing the candidate isometry from a matched pair
of points and checking the image set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Set, Tuple, Union

from distinct_triangles.geometry import (
    GeometryError,
    Point,
    RationalLike,
    as_fraction,
    check_distinct,
    cross,
    squared_distance,
)

TriangleSignature = Tuple[Fraction, Fraction, Fraction]


class _Collinear:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "COLLINEAR"

    def __bool__(self) -> bool:
        return False


COLLINEAR = _Collinear()


def triangle_signature(a: Point, b: Point, c: Point) -> Union[TriangleSignature, _Collinear]:
    """Sorted squared side lengths of ``abc``, or ``COLLINEAR``."""
    if a == b or b == c or a == c:
        raise GeometryError("triangle vertices must be distinct")
    if cross(a, b, c) == 0:
        return COLLINEAR
    return tuple(sorted((squared_distance(a, b), squared_distance(b, c), squared_distance(a, c))))


def satisfies_triangle_inequality(sig: Sequence[Fraction]) -> bool:
    """Strict triangle inequality on the square roots of sorted squared lengths."""
    a, b, c = sorted(sig)
    if a <= 0:
        return False
    if c <= a + b:
        return True
    return (c - a - b) ** 2 < 4 * a * b


@dataclass
class TriangleClassSet:
    classes: Set[tuple] = field(default_factory=set)

    def add(self, sig) -> bool:
        """Insert a signature; returns True if it was new. Collinear markers are ignored."""
        if sig is COLLINEAR or sig in self.classes:
            return False
        self.classes.add(sig)
        return True

    @property
    def count(self) -> int:
        return len(self.classes)

    def sorted_classes(self) -> list:
        return sorted(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def distinct_triangles(points: Sequence[Point]) -> TriangleClassSet:
    pts = list(points)
    if len(pts) < 3:
        raise GeometryError(f"need at least 3 points, got {len(pts)}")
    check_distinct(pts)
    result = TriangleClassSet()
    for a, b, c in combinations(pts, 3):
        result.add(triangle_signature(a, b, c))
    return result


@dataclass(frozen=True)
class RationalIsometry:
    """``p -> M p + t`` with ``M`` a rational orthogonal matrix."""

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction
    tx: Fraction = Fraction(0)
    ty: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("m00", "m01", "m10", "m11", "tx", "ty"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if (
            self.m00 * self.m00 + self.m10 * self.m10 != 1
            or self.m01 * self.m01 + self.m11 * self.m11 != 1
            or self.m00 * self.m01 + self.m10 * self.m11 != 0
        ):
            raise GeometryError("matrix is not orthogonal")

    @classmethod
    def identity(cls) -> "RationalIsometry":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_pythagorean(
        cls,
        p: int,
        q: int,
        reflect: bool = False,
        translation: Tuple[RationalLike, RationalLike] = (0, 0),
    ) -> "RationalIsometry":
        """Rotation with cos = (p²-q²)/(p²+q²), sin = 2pq/(p²+q²), optionally
        preceded by the reflection (x, y) -> (x, -y)."""
        h = p * p + q * q
        if h == 0:
            raise GeometryError("p and q cannot both be zero")
        c = Fraction(p * p - q * q, h)
        s = Fraction(2 * p * q, h)
        tx, ty = translation
        if reflect:
            return cls(c, s, s, -c, tx, ty)
        return cls(c, -s, s, c, tx, ty)

    @property
    def determinant(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    def __call__(self, p: Point) -> Point:
        return Point(
            self.m00 * p.x + self.m01 * p.y + self.tx,
            self.m10 * p.x + self.m11 * p.y + self.ty,
        )


def apply_isometry(points: Iterable[Point], iso: RationalIsometry) -> list:
    return [iso(p) for p in points]


def _diameter_pair(pts: Sequence[Point]) -> Tuple[int, int, Fraction]:
    best = (0, 1, squared_distance(pts[0], pts[1]))
    for i, j in combinations(range(len(pts)), 2):
        d = squared_distance(pts[i], pts[j])
        if d > best[2]:
            best = (i, j, d)
    return best


def _distance_profile(pts: Sequence[Point]) -> list:
    return sorted(squared_distance(p, q) for p, q in combinations(pts, 2))


def _pair_match(P: Sequence[Point], Q: Sequence[Point], scaled: bool) -> bool:
    i, j, dP = _diameter_pair(P)
    p1, p2 = P[i], P[j]
    u = p2 - p1
    target = set(Q)
    _, _, dQ = _diameter_pair(Q)
    if not scaled and dP != dQ:
        return False
    for q1 in Q:
        for q2 in Q:
            if q1 == q2 or squared_distance(q1, q2) != dQ:
                continue
            v = q2 - q1
            dot = u.x * v.x + u.y * v.y
            crs = u.x * v.y - u.y * v.x
            # orientation-preserving map sending u to v
            a, b = dot / dP, crs / dP
            if {q1 + Point(a * w.x - b * w.y, b * w.x + a * w.y) for w in (p - p1 for p in P)} == target:
                return True
            # reflected twin
            c = (u.x * v.x - u.y * v.y) / dP
            s = (u.y * v.x + u.x * v.y) / dP
            if {q1 + Point(c * w.x + s * w.y, s * w.x - c * w.y) for w in (p - p1 for p in P)} == target:
                return True
    return False


def configurations_congruent(P: Sequence[Point], Q: Sequence[Point]) -> bool:
    """True iff some isometry of the plane (reflections included) maps P onto Q."""
    P, Q = list(P), list(Q)
    if len(P) != len(Q):
        raise GeometryError(f"size mismatch: {len(P)} vs {len(Q)}")
    check_distinct(P)
    check_distinct(Q)
    if len(P) <= 1:
        return True
    if _distance_profile(P) != _distance_profile(Q):
        return False
    return _pair_match(P, Q, scaled=False)


def configurations_similar(P: Sequence[Point], Q: Sequence[Point]) -> bool:
    """Congruence after a uniform scaling (the scale factor may be irrational)."""
    P, Q = list(P), list(Q)
    if len(P) != len(Q):
        raise GeometryError(f"size mismatch: {len(P)} vs {len(Q)}")
    check_distinct(P)
    check_distinct(Q)
    if len(P) <= 2:
        return True
    return _pair_match(P, Q, scaled=True)


def scale_points(points: Iterable[Point], s: RationalLike) -> list:
    s = as_fraction(s)
    if s <= 0:
        raise GeometryError("scale factor must be positive")
    return [p.scaled(s) for p in points]


def triangle_count(points: Sequence[Point]) -> int:
    return distinct_triangles(points).count

