"""Exact counting of distinct triangles determined by planar point sets."""

from distinct_triangles.geometry import (
    ConvexReport,
    DuplicatePointError,
    GeometryError,
    Point,
    in_convex_position,
    orientation,
    squared_distance,
)
from distinct_triangles.congruence import (
    COLLINEAR,
    RationalIsometry,
    TriangleClassSet,
    apply_isometry,
    configurations_congruent,
    distinct_triangles,
    triangle_signature,
)
from distinct_triangles.quads import CaseBound, QuadCase, QuadTag, case_bound, classify_quad
from distinct_triangles.circle import (
    CircleConfig,
    chord_class,
    distinct_triangles_circle,
    nearest_integer_n2_over_12,
    ngon_triangle_count,
    partitions3,
    regular_ngon,
)

__version__ = "0.1.0"

__all__ = [
    "COLLINEAR",
    "CaseBound",
    "CircleConfig",
    "ConvexReport",
    "DuplicatePointError",
    "GeometryError",
    "Point",
    "QuadCase",
    "QuadTag",
    "RationalIsometry",
    "TriangleClassSet",
    "apply_isometry",
    "case_bound",
    "chord_class",
    "classify_quad",
    "configurations_congruent",
    "distinct_triangles",
    "distinct_triangles_circle",
    "in_convex_position",
    "nearest_integer_n2_over_12",
    "ngon_triangle_count",
    "orientation",
    "partitions3",
    "regular_ngon",
    "squared_distance",
    "triangle_signature",
]
