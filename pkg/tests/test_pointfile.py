import random
from fractions import Fraction

import pytest

from distinct_triangles import CircleConfig, GeometryError, Point, distinct_triangles_circle
from distinct_triangles.pointfile import (
    CIRCLE,
    EISENSTEIN,
    POINTS,
    PointFileError,
    PointSet,
    eisenstein_distinct_triangles,
    format_rational,
    from_points,
    parse,
    parse_rational,
    serialize,
)


def random_rational(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 12))


def random_file(rng) -> PointSet:
    kind = rng.choice((POINTS, CIRCLE, EISENSTEIN))
    n = rng.randint(0, 8)
    if kind == POINTS:
        pts = {Point(random_rational(rng), random_rational(rng)) for _ in range(n)}
        return PointSet(POINTS, points=tuple(sorted(pts)))
    if kind == CIRCLE:
        fr = {Fraction(rng.randint(0, 29), rng.choice((2, 3, 5, 7, 30))) % 1 for _ in range(n)}
        return PointSet(CIRCLE, circle=CircleConfig(fr, rng.random() < 0.5))
    pairs = {(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(n)}
    return PointSet(EISENSTEIN, points=tuple(sorted(pairs)))


def test_round_trip_random_files():
    rng = random.Random(2024)
    for _ in range(1000):
        ps = random_file(rng)
        text = serialize(ps)
        assert parse(text) == ps
        assert serialize(parse(text)) == text


def test_canonical_lowest_terms():
    ps = parse("points\n2/4 -6/3\n+3 0/5\n")
    assert ps.points == (Point(Fraction(1, 2), -2), Point(3, 0))
    assert serialize(ps) == "points\n1/2 -2\n3 0\n"


def test_comments_and_blank_lines():
    ps = parse("# header follows\n\ncircle  # kind\n0\n1/3 # a point\n\n2/3\ncenter\n")
    assert ps.circle == CircleConfig([0, Fraction(1, 3), Fraction(2, 3)], True)


@pytest.mark.parametrize("text, lineno", [
    ("", 1),
    ("# only a comment\n", 1),
    ("polygon\n0 0\n", 1),
    ("points\n0 0\n0.5 1\n", 3),
    ("points\n0 0\n1\n", 3),
    ("points\n1/0 2\n", 2),
    ("circle\n0\n1\n", 3),
    ("circle\n0\n-1/3\n", 3),
    ("circle\ncenter\n0\ncenter\n", 4),
    ("eisenstein\n0 0\n1/2 0\n", 3),
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(PointFileError) as info:
        parse(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}:")


def test_decimals_rejected():
    for token in ("0.5", "1e3", "1/2.0", "", "1/-2", "x"):
        with pytest.raises(ValueError):
            parse_rational(token)
    assert parse_rational("-7/21") == Fraction(-1, 3)
    assert format_rational(Fraction(-2, 4)) == "-1/2" and format_rational(Fraction(6, 3)) == "2"


def test_duplicates_are_semantic_errors():
    with pytest.raises(GeometryError):
        parse("circle\n0\n2/4\n1/2\n")
    ps = parse("points\n0 0\n0/3 0\n1 1\n")
    with pytest.raises(GeometryError):
        ps.classes()
    with pytest.raises(GeometryError):
        parse("eisenstein\n0 0\n0 0\n1 0\n").classes()


def test_classes_by_kind():
    assert from_points([(0, 0), (1, 0), (1, 1), (0, 1)]).classes().count == 1
    assert parse("circle\n0\n1/5\n2/5\n3/5\n4/5\n").classes().count == 2
    # a lattice rhombus made of two unit triangles
    assert parse("eisenstein\n0 0\n1 0\n0 1\n1 1\n").classes().count == 2
    with pytest.raises(GeometryError):
        from_points([(0, 0), (1, 0)]).classes()


def test_lattice_hexagon_matches_circle_hexagon():
    pairs = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
    sixths = [Fraction(k, 6) for k in range(6)]
    assert eisenstein_distinct_triangles(pairs).count == distinct_triangles_circle(CircleConfig(sixths)).count == 3
    with_center = eisenstein_distinct_triangles(pairs + [(0, 0)])
    assert with_center.count == distinct_triangles_circle(CircleConfig(sixths, True)).count == 4
