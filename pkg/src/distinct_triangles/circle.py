"""Points on the unit circle (plus optional centre) and the regular n-gon.

A circle point is a turn-fraction f in [0, 1). Chords are compared through
their canonical gap g = min(d, 1 - d), since the chord length 2 sin(pi g) is
strictly increasing on (0, 1/2]. The radius equals the chord with g = 1/6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

import numpy as np

from distinct_triangles.congruence import TriangleClassSet
from distinct_triangles.geometry import GeometryError, RationalLike, as_fraction

RADIUS_CLASS = Fraction(1, 6)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CircleConfig:
    fractions: Tuple[Fraction, ...]
    with_center: bool = False

    def __init__(self, fractions: Iterable[RationalLike], with_center: bool = False):
        fs = [as_fraction(f) % 1 for f in fractions]
        if len(set(fs)) != len(fs):
            raise GeometryError("duplicate circle points")
        object.__setattr__(self, "fractions", tuple(sorted(fs)))
        object.__setattr__(self, "with_center", bool(with_center))

    def __len__(self) -> int:
        return len(self.fractions) + self.with_center

    def rotated(self, delta: RationalLike) -> "CircleConfig":
        delta = as_fraction(delta)
        return CircleConfig((f + delta for f in self.fractions), self.with_center)

    def reflected(self) -> "CircleConfig":
        return CircleConfig((-f for f in self.fractions), self.with_center)


def chord_class(f1: RationalLike, f2: RationalLike) -> Fraction:
    d = (as_fraction(f2) - as_fraction(f1)) % 1
    if d == 0:
        raise GeometryError("chord endpoints coincide")
    return min(d, 1 - d)


def distinct_triangles_circle(
    cfg: CircleConfig, through: Optional[RationalLike] = None
) -> TriangleClassSet:
    """Triangle classes of ``cfg`` as sorted triples of chord classes.

    With ``through`` set, only triangles having that circle point as a
    vertex are counted.
    """
    if len(cfg) < 3:
        raise GeometryError(f"need at least 3 points, got {len(cfg)}")
    fs = cfg.fractions
    n = len(fs)
    anchor = None
    if through is not None:
        through = as_fraction(through) % 1
        if through not in fs:
            raise GeometryError(f"{through} is not a point of the configuration")
        anchor = fs.index(through)

    # Work in integer units of 1/(6L), L the common denominator: gaps are then
    # integers and the radius (gap 1/6) is exactly L.
    L = math.lcm(*(f.denominator for f in fs)) if fs else 1
    unit = 6 * L
    u = [f.numerator * (L // f.denominator) for f in fs]
    g = [[None] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        d = (u[j] - u[i]) % L
        g[i][j] = g[j][i] = 6 * min(d, L - d)
    radius, half = L, 3 * L

    values = sorted({g[i][j] for i, j in combinations(range(n), 2)} | {radius})
    rank_of = {v: r for r, v in enumerate(values)}
    base = len(values)
    rank = [[rank_of[x] if x is not None else -1 for x in row] for row in g]

    keys = set()
    if n >= 3:
        r = np.array(rank, dtype=np.int64)
        i, j, k = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        mask = (i < j) & (j < k)
        if anchor is not None:
            mask &= (i == anchor) | (j == anchor) | (k == anchor)
        i, j, k = i[mask], j[mask], k[mask]
        sides = np.sort(np.stack([r[i, j], r[j, k], r[i, k]], axis=1), axis=1)
        codes = (sides[:, 0] * base + sides[:, 1]) * base + sides[:, 2]
        keys.update(int(c) for c in np.unique(codes))
    if cfg.with_center:
        rc = rank_of[radius]
        for i, j in combinations(range(n), 2):
            if anchor is not None and anchor not in (i, j):
                continue
            if g[i][j] == half:
                continue  # centre lies on a diameter
            a, b, c = rc, rc, rank[i][j]
            lo, hi = min(a, c), max(a, c)
            keys.add((lo * base + (a + b + c - lo - hi)) * base + hi)

    result = TriangleClassSet()
    for key in keys:
        key, hi = divmod(key, base)
        lo, mid = divmod(key, base)
        result.add((Fraction(values[lo], unit), Fraction(values[mid], unit), Fraction(values[hi], unit)))
    return result


def regular_ngon(n: int) -> CircleConfig:
    if n < 3:
        raise GeometryError("a polygon needs at least 3 vertices")
    return CircleConfig(Fraction(k, n) for k in range(n))


def partitions3(n: int) -> List[Tuple[int, int, int]]:
    """Partitions of ``n`` into three positive parts a >= b >= c, lexicographically."""
    if n < 3:
        raise GeometryError("n must be at least 3")
    out = []
    for a in range(-(-n // 3), n - 1):
        for b in range(max(1, -(-(n - a) // 2)), min(a, n - a - 1) + 1):
            out.append((a, b, n - a - b))
    return out


def count_partitions3(n: int) -> int:
    """``len(partitions3(n))`` without building the list."""
    if n < 3:
        raise GeometryError("n must be at least 3")
    total = 0
    for a in range(-(-n // 3), n - 1):
        lo, hi = max(1, -(-(n - a) // 2)), min(a, n - a - 1)
        if hi >= lo:
            total += hi - lo + 1
    return total


def count_partitions3_by_cuts(n: int) -> int:
    """p(n, 3) by counting cut points k < l with k >= l - k >= n - l > 0."""
    if n < 3:
        raise GeometryError("n must be at least 3")
    total = 0
    for k in range(-(-n // 3), n - 1):
        lo = k + -(-(n - k) // 2)
        hi = min(2 * k, n - 1)
        if hi >= lo:
            total += hi - lo + 1
    return total


def nearest_integer_n2_over_12(n: int) -> int:
    if n < 0:
        raise GeometryError("n must be non-negative")
    # n^2 mod 12 is 0, 1, 4 or 9, so n^2/12 never ends in exactly 1/2
    return (n * n + 6) // 12


def ngon_triangle_count(n: int) -> int:
    return count_partitions3(n)


def partition_of_triangle(n: int, a: int, b: int) -> Tuple[int, int, int]:
    """Gap multiset {a, b - a, n - b} of the triangle P0 Pa Pb, sorted descending."""
    if not 0 < a < b < n:
        raise GeometryError("need 0 < a < b < n")
    return tuple(sorted((a, b - a, n - b), reverse=True))
