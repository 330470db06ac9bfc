"""Text point files.

Three formats, selected by the first non-comment line::

    points        circle        eisenstein
    0 0           0             0 0
    1/2 3         1/5           1 -1
                  center

``#`` starts a comment. Coordinates are integers or ``p/q``; decimals are
rejected so nothing is silently rounded.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple, Union

from distinct_triangles.circle import HALF, CircleConfig, chord_class, distinct_triangles_circle
from distinct_triangles.congruence import TriangleClassSet, distinct_triangles
from distinct_triangles.geometry import GeometryError, Point, check_distinct, orientation
from distinct_triangles.search import eisenstein_norm

POINTS = "points"
CIRCLE = "circle"
EISENSTEIN = "eisenstein"
KINDS = (POINTS, CIRCLE, EISENSTEIN)

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTEGER = re.compile(r"^[+-]?\d+$")


class PointFileError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not an integer or p/q rational: {token!r}")
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {token!r}")
    return Fraction(token)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class PointSet:
    """Parsed content of a point file."""

    kind: str
    points: tuple = ()            # Point for "points", (a, b) for "eisenstein"
    circle: CircleConfig = None   # only for "circle"

    def __len__(self) -> int:
        if self.kind == CIRCLE:
            return len(self.circle)
        return len(self.points)

    def check(self) -> None:
        """Raise GeometryError on duplicates."""
        if self.kind == POINTS:
            check_distinct(self.points)
        elif self.kind == EISENSTEIN:
            if len(set(self.points)) != len(self.points):
                raise GeometryError("duplicate lattice point")

    def classes(self) -> TriangleClassSet:
        self.check()
        if len(self) < 3:
            raise GeometryError(f"need at least 3 points, got {len(self)}")
        if self.kind == POINTS:
            return distinct_triangles(self.points)
        if self.kind == CIRCLE:
            return distinct_triangles_circle(self.circle)
        return eisenstein_distinct_triangles(self.points)

    # rendering support ---------------------------------------------------

    def vertices(self) -> list:
        """Vertex tokens in drawing order; the circle centre is ``None``."""
        if self.kind == CIRCLE:
            return list(self.circle.fractions) + ([None] if self.circle.with_center else [])
        return list(self.points)

    def collinear(self, u, v, w) -> bool:
        if self.kind == POINTS:
            return orientation(u, v, w) == 0
        if self.kind == CIRCLE:
            rim = [f for f in (u, v, w) if f is not None]
            return len(rim) == 2 and chord_class(rim[0], rim[1]) == HALF
        return (v[0] - u[0]) * (w[1] - u[1]) - (w[0] - u[0]) * (v[1] - u[1]) == 0

    def float_xy(self, vertex) -> Tuple[float, float]:
        if self.kind == POINTS:
            return float(vertex.x), float(vertex.y)
        if self.kind == CIRCLE:
            if vertex is None:
                return 0.0, 0.0
            angle = 2 * math.pi * vertex
            return math.cos(angle), math.sin(angle)
        a, b = vertex
        return a + b / 2, b * math.sqrt(3) / 2


def eisenstein_distinct_triangles(pairs: Sequence[Tuple[int, int]]) -> TriangleClassSet:
    result = TriangleClassSet()
    for p, q, r in combinations(pairs, 3):
        if (q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]) == 0:
            continue
        result.add(tuple(sorted((
            eisenstein_norm(q[0] - p[0], q[1] - p[1]),
            eisenstein_norm(r[0] - q[0], r[1] - q[1]),
            eisenstein_norm(r[0] - p[0], r[1] - p[1]),
        ))))
    return result


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse(text: str) -> PointSet:
    records = _records(text)
    try:
        lineno, header = next(records)
    except StopIteration:
        raise PointFileError(1, "empty file: expected a header line") from None
    header = header.lower()
    if header not in KINDS:
        raise PointFileError(lineno, f"unknown header {header!r}; expected one of {', '.join(KINDS)}")

    if header == CIRCLE:
        fractions: List[Fraction] = []
        center = False
        for lineno, line in records:
            if line.lower() == "center":
                if center:
                    raise PointFileError(lineno, "center given twice")
                center = True
                continue
            try:
                f = parse_rational(line)
            except ValueError as exc:
                raise PointFileError(lineno, str(exc)) from None
            if not 0 <= f < 1:
                raise PointFileError(lineno, f"turn-fraction {line} outside [0, 1)")
            fractions.append(f)
        # duplicates are a semantic error, raised by CircleConfig
        return PointSet(CIRCLE, circle=CircleConfig(fractions, center))

    points: list = []
    for lineno, line in records:
        fields = line.split()
        if len(fields) != 2:
            raise PointFileError(lineno, f"expected 2 coordinates, got {len(fields)}")
        try:
            if header == POINTS:
                points.append(Point(parse_rational(fields[0]), parse_rational(fields[1])))
            else:
                if not all(_INTEGER.match(f) for f in fields):
                    raise ValueError(f"lattice coordinates must be integers: {line!r}")
                points.append((int(fields[0]), int(fields[1])))
        except ValueError as exc:
            raise PointFileError(lineno, str(exc)) from None
    return PointSet(header, points=tuple(points))


def serialize(ps: PointSet) -> str:
    lines = [ps.kind]
    if ps.kind == POINTS:
        lines += [f"{format_rational(p.x)} {format_rational(p.y)}" for p in ps.points]
    elif ps.kind == CIRCLE:
        lines += [format_rational(f) for f in ps.circle.fractions]
        if ps.circle.with_center:
            lines.append("center")
    else:
        lines += [f"{a} {b}" for a, b in ps.points]
    return "\n".join(lines) + "\n"


def read(path: str) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def from_points(points: Sequence[Union[Point, Tuple]]) -> PointSet:
    return PointSet(POINTS, points=tuple(p if isinstance(p, Point) else Point(*p) for p in points))
