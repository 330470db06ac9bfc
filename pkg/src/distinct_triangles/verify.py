"""Computational checks of the four-point taxonomy, the F(1)/F(2) values,
the regular-polygon count and the conjecture evidence.

Each suite returns a list of :class:`Check`; the CLI prints one line per
check and exits nonzero when any fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Sequence

from distinct_triangles.circle import (
    CircleConfig,
    count_partitions3,
    count_partitions3_by_cuts,
    distinct_triangles_circle,
    nearest_integer_n2_over_12,
    partitions3,
    regular_ngon,
)
from distinct_triangles.congruence import distinct_triangles
from distinct_triangles.geometry import Point, orientation, squared_distance
from distinct_triangles.quads import QuadTag, case_bound, classify_quad
from distinct_triangles.search import (
    build_ground_set,
    conjecture_evidence,
    max_points_with_exactly,
    min_triangles,
)

SUITES = ("lemma", "theorem1", "theorem2", "conjectures")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


# --- four-point sets ---------------------------------------------------------

_COORDS = [Fraction(v, d) for d in (1, 2, 3) for v in range(0, 4 * d + 1)]


def random_quad(rng: random.Random) -> List[Point]:
    """Four distinct rational points, not all collinear.

    Coordinates come from a small pool so that the special cases (equal
    sides, collinear triples) actually occur.
    """
    while True:
        if rng.random() < 0.5:
            pts = [Point(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(4)]
        else:
            pts = [Point(rng.choice(_COORDS), rng.choice(_COORDS)) for _ in range(4)]
        if len(set(pts)) < 4:
            continue
        if all(orientation(pts[0], pts[1], p) == 0 for p in pts[2:]):
            continue
        return pts


def case_predicates(pts: Sequence[Point]) -> Dict[QuadTag, bool]:
    """Each case of the taxonomy tested directly from its definition.

    Deliberately independent of :func:`classify_quad`: the hull cycle is found
    by trying every ordering, and side patterns are read off all six pairs.
    """
    collinear_triple = any(orientation(a, b, c) == 0 for a, b, c in combinations(pts, 3))
    interior = False
    for i in range(4):
        a, b, c = (pts[j] for j in range(4) if j != i)
        signs = {orientation(a, b, pts[i]), orientation(b, c, pts[i]), orientation(c, a, pts[i])}
        if not (1 in signs and -1 in signs) and 0 not in signs:
            interior = True
    preds = {tag: False for tag in QuadTag}
    preds[QuadTag.NOT_CONVEX] = interior
    preds[QuadTag.THREE_COLLINEAR] = collinear_triple and not interior
    if interior or collinear_triple:
        return preds

    cycle = None
    for perm in permutations(range(1, 4)):
        order = (0,) + perm
        turns = {orientation(pts[order[k]], pts[order[(k + 1) % 4]], pts[order[(k + 2) % 4]]) for k in range(4)}
        if len(turns) == 1:
            cycle = order
            break
    s = [squared_distance(pts[cycle[k]], pts[cycle[(k + 1) % 4]]) for k in range(4)]
    equal_pairs = [(i, j) for i, j in combinations(range(4), 2) if s[i] == s[j]]
    adjacent = lambda i, j: (j - i) % 4 in (1, 3)  # noqa: E731
    n_eq = len(equal_pairs)
    preds[QuadTag.ALL_SIDES_DISTINCT] = n_eq == 0
    preds[QuadTag.ONE_PAIR_ADJACENT] = n_eq == 1 and adjacent(*equal_pairs[0])
    preds[QuadTag.ONE_PAIR_OPPOSITE] = n_eq == 1 and not adjacent(*equal_pairs[0])
    two_pairs = n_eq == 2
    preds[QuadTag.KITE] = two_pairs and all(adjacent(i, j) for i, j in equal_pairs)
    preds[QuadTag.PARALLELOGRAM] = two_pairs and not any(adjacent(i, j) for i, j in equal_pairs)
    preds[QuadTag.THREE_SIDES_CONGRUENT] = n_eq == 3
    preds[QuadTag.RHOMBUS] = n_eq == 6
    return preds


TIGHTNESS = [
    ("rectangle", [(0, 0), (3, 0), (3, 1), (0, 1)], 1),
    ("non-rectangle parallelogram", [(0, 0), (3, 0), (4, 2), (1, 2)], 2),
    ("square", [(0, 0), (1, 0), (1, 1), (0, 1)], 1),
    ("non-square rhombus", [(0, 0), (5, 0), (8, 4), (3, 4)], 2),
    ("kite", [(0, 0), (2, 0), (3, 3), (0, 2)], 3),
]


def lemma_suite(seed: int = 0, samples: int = 10_000) -> List[Check]:
    rng = random.Random(seed)
    bad_tag = bad_bound = 0
    seen: Dict[str, int] = {}
    for _ in range(samples):
        pts = random_quad(rng)
        case = classify_quad(pts)
        preds = case_predicates(pts)
        if sum(preds.values()) != 1 or not preds[case.tag]:
            bad_tag += 1
        if distinct_triangles(pts).count < case_bound(case).min_distinct_triangles:
            bad_bound += 1
        seen[case.tag.value] = seen.get(case.tag.value, 0) + 1
    checks = [
        Check("lemma.one_case_each", bad_tag == 0, f"{samples} random quadruples, {bad_tag} mismatches"),
        Check("lemma.bound_respected", bad_bound == 0, f"{bad_bound} violations"),
        Check("lemma.all_cases_hit", len(seen) == len(QuadTag), f"{len(seen)}/{len(QuadTag)} tags seen"),
    ]
    for name, coords, expected in TIGHTNESS:
        pts = [Point(*c) for c in coords]
        actual = distinct_triangles(pts).count
        bound = case_bound(classify_quad(pts)).min_distinct_triangles
        checks.append(Check(f"lemma.tight.{name.replace(' ', '_')}", actual == expected == bound,
                            f"count {actual}, bound {bound}, expected {expected}"))
    return checks


# --- F(1) and F(2) -----------------------------------------------------------

SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]
SQUARE_WITH_CENTER = [Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2), Point(1, 1)]


def theorem1_suite(progress: Optional[Callable[[str], None]] = None) -> List[Check]:
    checks = []
    sq = distinct_triangles(SQUARE).count
    checks.append(Check("theorem1.square", sq == 1, f"count {sq}"))
    pent = distinct_triangles_circle(regular_ngon(5)).count
    checks.append(Check("theorem1.pentagon", pent == 2, f"count {pent}"))
    circ = distinct_triangles_circle(CircleConfig([0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)], True)).count
    rat = distinct_triangles(SQUARE_WITH_CENTER).count
    checks.append(Check("theorem1.square_with_center", circ == rat == 2, f"circle {circ}, rational {rat}"))

    grid = build_ground_set("grid", k=5)
    res = min_triangles(grid, 5)
    checks.append(Check("theorem1.grid5_no_5set_with_1", res.exhaustive and res.best_count >= 2,
                        f"min over 5-subsets {res.best_count}, exhaustive over {grid.describe()}"))
    row = max_points_with_exactly(grid, 1)
    wit = [grid.sites[i] for i in row.witness] if row.witness else []
    checks.append(Check("theorem1.F1_grid5", row.max_n == 4 and _is_rectangle(wit),
                        f"max n {row.max_n}, witness {[grid.site_label(i) for i in row.witness or ()]}"))
    if progress:
        progress("grid done")

    circle = build_ground_set("circle", D=20, with_center=True)
    res = min_triangles(circle, 6, cutoff=2)
    checks.append(Check("theorem1.circle20c_no_6set_with_2", res.exhaustive and res.best_count is None,
                        f"no 6-subset with <= 2 classes, exhaustive over {circle.describe()}"))
    row = max_points_with_exactly(circle, 2)
    checks.append(Check("theorem1.F2_circle20c", row.max_n == 5,
                        f"max n {row.max_n}, witnesses {[[circle.site_label(i) for i in w] for w in row.witnesses]}"))
    return checks


def _is_rectangle(pts: Sequence[Point]) -> bool:
    """Four points with equal diagonals and both pairs of opposite sides equal."""
    if len(pts) != 4:
        return False
    case = classify_quad(pts)
    return case.is_rectangle and case.tag in (QuadTag.PARALLELOGRAM, QuadTag.RHOMBUS)


# --- regular polygons --------------------------------------------------------

def theorem2_suite(max_n: int = 2000, enum_n: int = 120, list_n: int = 200) -> List[Check]:
    counts = {n: count_partitions3(n) for n in range(3, max_n + 1)}
    bad = [n for n, c in counts.items() if c != nearest_integer_n2_over_12(n)]
    checks = [Check("theorem2.partitions_vs_round", not bad, f"3 <= n <= {max_n}, mismatches {bad[:5]}")]
    bad = [n for n, c in counts.items() if count_partitions3_by_cuts(n) != c]
    checks.append(Check("theorem2.cut_point_count", not bad, f"mismatches {bad[:5]}"))
    bad = [n for n in range(3, list_n + 1) if len(partitions3(n)) != counts[n]]
    checks.append(Check("theorem2.listing_length", not bad, f"3 <= n <= {list_n}, mismatches {bad[:5]}"))
    gap = max(abs(c - Fraction(n * n, 12)) for n, c in counts.items())
    checks.append(Check("theorem2.gap_le_3/4", gap <= Fraction(3, 4), f"max |p(n,3) - n^2/12| = {gap}"))
    bad = [n for n in range(3, enum_n + 1)
           if distinct_triangles_circle(regular_ngon(n)).count != counts[n]]
    checks.append(Check("theorem2.ngon_enumeration", not bad, f"3 <= n <= {enum_n}, mismatches {bad[:5]}"))
    return checks


# --- conjectures -------------------------------------------------------------

def conjectures_suite(jobs: int = 1, progress: Optional[Callable[[str], None]] = None) -> List[Check]:
    checks = []
    seven = conjecture_evidence(
        "seven_points",
        [build_ground_set("circle", D=14), build_ground_set("lattice", r=2)],
        jobs=jobs, progress=progress,
    )
    for c in seven["checks"]:
        checks.append(Check(f"conjecture1.{c['ground']}", c["ok"],
                            f"min over 7-subsets {c['min_found']} >= 4 ({c['qualifier']})"))
    for n in range(4, 9):
        rep = conjecture_evidence(
            "regular_polygon_optimal",
            [build_ground_set("circle", D=2 * n), build_ground_set("lattice", r=3)],
            ns=[n], jobs=jobs, progress=progress,
        )
        for c in rep["checks"]:
            ok = c["ok"] and c.get("ngon_attains_min", True)
            extra = f", n-gon count {c['ngon_count']}" if "ngon_count" in c else ""
            checks.append(Check(f"conjecture2.n{n}.{c['ground']}", ok,
                                f"min {c['min_found']} >= {c['required']}{extra} ({c['qualifier']})"))
    return checks


def run_suite(name: str, seed: int = 0, jobs: int = 1,
              progress: Optional[Callable[[str], None]] = None) -> List[Check]:
    if name == "lemma":
        return lemma_suite(seed)
    if name == "theorem1":
        return theorem1_suite(progress)
    if name == "theorem2":
        return theorem2_suite()
    if name == "conjectures":
        return conjectures_suite(jobs, progress)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
