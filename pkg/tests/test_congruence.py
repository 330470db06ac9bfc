from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from distinct_triangles import (
    COLLINEAR,
    GeometryError,
    Point,
    RationalIsometry,
    apply_isometry,
    configurations_congruent,
    distinct_triangles,
    triangle_signature,
)
from distinct_triangles.congruence import configurations_similar, satisfies_triangle_inequality, scale_points

from conftest import distinct_point_lists, points, pythagorean_isometries


def expand(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def test_signature_right_isosceles():
    assert triangle_signature(Point(0, 0), Point(1, 0), Point(0, 1)) == (1, 1, 2)


def test_signature_collinear():
    assert triangle_signature(Point(0, 0), Point(2, 0), Point(4, 0)) is COLLINEAR


def test_signature_scalene_by_direct_expansion():
    a, b, c = (0, 0), (4, 0), (1, 2)
    expected = tuple(sorted((expand(a, b), expand(a, c), expand(b, c))))
    assert expected == (5, 13, 16)
    assert triangle_signature(Point(*a), Point(*b), Point(*c)) == expected


def test_signature_rejects_duplicates():
    with pytest.raises(GeometryError):
        triangle_signature(Point(0, 0), Point(0, 0), Point(1, 0))


@pytest.mark.parametrize("coords, expected", [
    ([(0, 0), (1, 0), (1, 1), (0, 1)], 1),
    ([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)], 2),
    ([(0, 0), (1, 0), (2, 0)], 0),
])
def test_distinct_triangles_examples(coords, expected):
    assert distinct_triangles([Point(*c) for c in coords]).count == expected


def test_kite_count_by_brute_force():
    kite = [(0, 0), (2, 0), (3, 3), (0, 2)]
    classes = {tuple(sorted((expand(a, b), expand(b, c), expand(a, c)))) for a, b, c in combinations(kite, 3)}
    assert len(classes) == 3
    assert distinct_triangles([Point(*c) for c in kite]).count == 3


def test_distinct_triangles_errors():
    with pytest.raises(GeometryError):
        distinct_triangles([Point(0, 0), Point(1, 0)])
    with pytest.raises(GeometryError):
        distinct_triangles([Point(0, 0), Point(1, 0), Point(1, 0)])


def test_class_set_insert_idempotent():
    s = distinct_triangles([Point(0, 0), Point(1, 0), Point(0, 1)])
    assert not s.add((Fraction(1), Fraction(1), Fraction(2)))
    assert not s.add(COLLINEAR)
    assert s.count == len(s.classes) == 1


def test_isometry_examples():
    pts = [Point(0, 0), Point(3, 1), Point(-2, 5)]
    assert apply_isometry(pts, RationalIsometry.identity()) == pts
    rot = RationalIsometry(Fraction(3, 5), Fraction(-4, 5), Fraction(4, 5), Fraction(3, 5))
    assert apply_isometry([Point(0, 0), Point(5, 0)], rot) == [Point(0, 0), Point(3, 4)]
    flip = RationalIsometry(1, 0, 0, -1)
    tri = [Point(0, 0), Point(1, 0), Point(0, 1)]
    assert triangle_signature(*apply_isometry(tri, flip)) == (1, 1, 2)


def test_isometry_rejects_non_orthogonal():
    with pytest.raises(GeometryError):
        RationalIsometry(1, 1, 0, 1)


@given(pythagorean_isometries())
def test_pythagorean_matrices_orthonormal(iso):
    assert iso.m00 ** 2 + iso.m10 ** 2 == 1
    assert iso.m01 ** 2 + iso.m11 ** 2 == 1
    assert iso.m00 * iso.m01 + iso.m10 * iso.m11 == 0
    assert abs(iso.determinant) == 1


def test_congruence_examples(square):
    shifted = [p + Point(7, -3) for p in square]
    assert configurations_congruent(square, shifted)
    rect = [Point(0, 0), Point(2, 0), Point(2, 1), Point(0, 1)]
    assert not configurations_congruent(square, rect)
    assert configurations_congruent(
        [Point(0, 0), Point(1, 0), Point(0, 1)], [Point(0, 0), Point(0, 1), Point(-1, 0)]
    )
    with pytest.raises(GeometryError):
        configurations_congruent(square, square[:3])


def test_congruence_needs_reflection():
    # a chiral 4-point set and its mirror image
    p = [Point(0, 0), Point(3, 0), Point(0, 1), Point(1, 2)]
    mirror = [Point(-q.x, q.y) for q in p]
    assert configurations_congruent(p, mirror)


def test_similarity_with_irrational_scale():
    sq = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
    tilted = [Point(1, 0), Point(2, 1), Point(1, 2), Point(0, 1)]  # side sqrt(2)
    assert not configurations_congruent(sq, tilted)
    assert configurations_similar(sq, tilted)
    assert not configurations_similar(sq, [Point(0, 0), Point(2, 0), Point(2, 1), Point(0, 1)])


@given(points, points, points)
def test_signature_permutation_invariant(a, b, c):
    assume(len({a, b, c}) == 3)
    sigs = {triangle_signature(*perm) for perm in permutations((a, b, c))}
    assert len(sigs) == 1


@given(points, points, points)
def test_signature_satisfies_triangle_inequality(a, b, c):
    assume(len({a, b, c}) == 3)
    sig = triangle_signature(a, b, c)
    if sig is COLLINEAR:
        # degenerate: the sides add up exactly
        s = sorted((expand((a.x, a.y), (b.x, b.y)), expand((b.x, b.y), (c.x, c.y)), expand((a.x, a.y), (c.x, c.y))))
        assert (s[2] - s[0] - s[1]) ** 2 == 4 * s[0] * s[1]
    else:
        assert satisfies_triangle_inequality(sig)


@settings(max_examples=200)
@given(distinct_point_lists(), pythagorean_isometries())
def test_isometry_invariance_of_classes(pts, iso):
    image = apply_isometry(pts, iso)
    assert len(set(image)) == len(pts)
    assert distinct_triangles(image).classes == distinct_triangles(pts).classes


@settings(max_examples=200)
@given(distinct_point_lists(), st.fractions(min_value=Fraction(1, 7), max_value=9))
def test_scaling_invariance_of_count(pts, s):
    scaled = distinct_triangles(scale_points(pts, s))
    assert scaled.count == distinct_triangles(pts).count
    assert scaled.classes == {tuple(x * s * s for x in sig) for sig in distinct_triangles(pts).classes}


@settings(max_examples=200)
@given(distinct_point_lists(max_size=6), points)
def test_monotone_under_adding_a_point(pts, extra):
    assume(extra not in pts)
    assert distinct_triangles(pts).count <= distinct_triangles(pts + [extra]).count


@settings(max_examples=100)
@given(distinct_point_lists(min_size=2, max_size=6), pythagorean_isometries(), st.randoms())
def test_congruent_configs_share_classes(pts, iso, rnd):
    image = apply_isometry(pts, iso)
    rnd.shuffle(image)
    assert configurations_congruent(pts, pts)
    assert configurations_congruent(pts, image)
    assert configurations_congruent(image, pts)
    if len(pts) >= 3:
        assert distinct_triangles(pts).classes == distinct_triangles(image).classes


def test_homometric_sets_are_not_congruent():
    # equal multisets of pairwise distances, yet no isometry relates them
    a = [Point(x, 0) for x in (0, 1, 4, 10, 12, 17)]
    b = [Point(x, 0) for x in (0, 1, 8, 11, 13, 17)]
    da = sorted(abs(p.x - q.x) for p, q in combinations(a, 2))
    db = sorted(abs(p.x - q.x) for p, q in combinations(b, 2))
    assert da == db
    assert not configurations_congruent(a, b)
