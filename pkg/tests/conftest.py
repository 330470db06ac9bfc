from fractions import Fraction

import pytest
from hypothesis import strategies as st

from distinct_triangles import Point

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=4),
)
points = st.builds(Point, small_rationals, small_rationals)


def distinct_point_lists(min_size=3, max_size=7):
    return st.lists(points, min_size=min_size, max_size=max_size, unique=True)


def pythagorean_isometries():
    from distinct_triangles import RationalIsometry

    return st.builds(
        RationalIsometry.from_pythagorean,
        st.integers(min_value=0, max_value=6),
        st.integers(min_value=1, max_value=6),
        st.booleans(),
        st.tuples(small_rationals, small_rationals),
    )


@pytest.fixture
def square():
    return [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


@pytest.fixture
def square_with_center():
    return [Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2), Point(1, 1)]
