"""Subset search over finite point universes for extremal triangle counts.

A :class:`GroundSet` is a finite list of sites with an exact length oracle.
Before searching, every pair of sites is mapped to a dense length rank and
every triple to a dense triangle-class id, so the depth-first search only
touches integer tables.

Subsets lying entirely on one line determine no triangle and are never
reported.

The search enumerates subsets in lexicographic order of site indices. A
candidate site is dropped from a branch as soon as adding it would push the
class count over the current limit; because adding points never removes
classes, a dropped candidate can never become admissible deeper in the
same branch.
"""

from __future__ import annotations

import functools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from distinct_triangles.circle import (
    HALF,
    RADIUS_CLASS,
    CircleConfig,
    chord_class,
    distinct_triangles_circle,
    ngon_triangle_count,
)
from distinct_triangles.congruence import configurations_congruent, configurations_similar, distinct_triangles
from distinct_triangles.geometry import GeometryError, Point, orientation, squared_distance

log = logging.getLogger(__name__)

GRID = "grid"
CIRCLE = "circle"
LATTICE = "lattice"
KIND_ALIASES = {
    "grid": GRID,
    "rationalgrid": GRID,
    "circle": CIRCLE,
    "circledivisions": CIRCLE,
    "lattice": LATTICE,
    "eisenstein": LATTICE,
    "eisensteinball": LATTICE,
}

DEFAULT_WITNESSES = 20


class SearchError(ValueError):
    pass


class BudgetExceeded(Exception):
    pass


@functools.total_ordering
class LengthKey:
    """An exact length tagged with the kind of ground set it came from.

    Keys of different kinds are not comparable: a grid's squared length 1 and
    a circle's chord class 1/6 happen to be different encodings of lengths,
    not lengths in a shared unit.
    """

    __slots__ = ("kind", "value")

    def __init__(self, kind: str, value):
        self.kind = kind
        self.value = value

    def _check(self, other) -> None:
        if not isinstance(other, LengthKey):
            raise TypeError(f"cannot compare LengthKey with {type(other).__name__}")
        if other.kind != self.kind:
            raise TypeError(f"cannot compare {self.kind} length with {other.kind} length")

    def __eq__(self, other) -> bool:
        self._check(other)
        return self.value == other.value

    def __lt__(self, other) -> bool:
        self._check(other)
        return self.value < other.value

    def __hash__(self) -> int:
        return hash((self.kind, self.value))

    def __repr__(self) -> str:
        return f"LengthKey({self.kind}, {self.value})"


def eisenstein_norm(a: int, b: int) -> int:
    return a * a + a * b + b * b


def _lattice_angle_cmp(p: Tuple[int, int], q: Tuple[int, int]) -> int:
    # x = a + b/2, y = b*sqrt(3)/2; the upper half-plane is y > 0, or y == 0 and x > 0
    def half(s):
        a, b = s
        return 0 if (b > 0 or (b == 0 and 2 * a + b > 0)) else 1

    hp, hq = half(p), half(q)
    if hp != hq:
        return hp - hq
    det = p[0] * q[1] - p[1] * q[0]
    return -1 if det > 0 else (1 if det < 0 else 0)


@dataclass
class GroundSet:
    kind: str
    param: int
    with_center: bool = False
    sites: tuple = ()
    _rank: list = field(default=None, repr=False, compare=False)
    _tri: list = field(default=None, repr=False, compare=False)
    _class_sigs: list = field(default=None, repr=False, compare=False)
    _rank_values: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self._compile()

    def __len__(self) -> int:
        return len(self.sites)

    def describe(self) -> str:
        if self.kind == GRID:
            return f"RationalGrid(k={self.param})"
        if self.kind == CIRCLE:
            return f"CircleDivisions(D={self.param}{', with_center' if self.with_center else ''})"
        return f"EisensteinBall(r={self.param})"

    # exact oracles -------------------------------------------------------

    def length_key(self, i: int, j: int) -> LengthKey:
        if i == j:
            raise GeometryError("a site has no length to itself")
        s, t = self.sites[i], self.sites[j]
        if self.kind == GRID:
            return LengthKey(GRID, squared_distance(s, t))
        if self.kind == CIRCLE:
            if s is None or t is None:
                return LengthKey(CIRCLE, RADIUS_CLASS)
            return LengthKey(CIRCLE, chord_class(s, t))
        return LengthKey(LATTICE, eisenstein_norm(s[0] - t[0], s[1] - t[1]))

    def is_collinear(self, i: int, j: int, k: int) -> bool:
        s, t, u = self.sites[i], self.sites[j], self.sites[k]
        if self.kind == GRID:
            return orientation(s, t, u) == 0
        if self.kind == CIRCLE:
            rim = [f for f in (s, t, u) if f is not None]
            if len(rim) == 3:
                return False
            return chord_class(rim[0], rim[1]) == HALF
        da1, db1 = t[0] - s[0], t[1] - s[1]
        da2, db2 = u[0] - s[0], u[1] - s[1]
        return da1 * db2 - da2 * db1 == 0

    # compiled tables -----------------------------------------------------

    def _compile(self) -> None:
        m = len(self.sites)
        values = sorted({self.length_key(i, j).value for i, j in combinations(range(m), 2)})
        index = {v: r for r, v in enumerate(values)}
        rank = [[-1] * m for _ in range(m)]
        for i, j in combinations(range(m), 2):
            rank[i][j] = rank[j][i] = index[self.length_key(i, j).value]
        class_ids: Dict[Tuple[int, int, int], int] = {}
        # id 0 is reserved for collinear triples and is permanently "present"
        sigs: List[Optional[Tuple[int, int, int]]] = [None]
        tri = [[[0] * m for _ in range(m)] for _ in range(m)]
        for i, j, k in combinations(range(m), 3):
            if self.is_collinear(i, j, k):
                cid = 0
            else:
                key = tuple(sorted((rank[i][j], rank[j][k], rank[i][k])))
                cid = class_ids.get(key)
                if cid is None:
                    cid = class_ids[key] = len(sigs)
                    sigs.append(key)
            for a, b, c in ((i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)):
                tri[a][b][c] = cid
        self._rank, self._tri, self._class_sigs, self._rank_values = rank, tri, sigs, values

    @property
    def num_classes(self) -> int:
        return len(self._class_sigs) - 1

    def class_signature(self, cid: int) -> tuple:
        return tuple(self._rank_values[r] for r in self._class_sigs[cid])

    def subset_classes(self, subset: Sequence[int]) -> set:
        tri = self._tri
        ids = {tri[a][b][c] for a, b, c in combinations(subset, 3)}
        ids.discard(0)
        return ids

    def count(self, subset: Sequence[int]) -> int:
        return len(self.subset_classes(subset))

    # independent recount and congruence -----------------------------------

    def recount(self, subset: Sequence[int]) -> int:
        """Distinct triangles of a subset, computed without the compiled tables."""
        sites = [self.sites[i] for i in subset]
        if len(sites) < 3:
            return 0
        if self.kind == GRID:
            return distinct_triangles(sites).count
        if self.kind == CIRCLE:
            rim = [f for f in sites if f is not None]
            return distinct_triangles_circle(CircleConfig(rim, len(rim) < len(sites))).count
        # triangular lattice in Cartesian form: (a + b/2, (b/2) * sqrt(3))
        xy = [(Fraction(2 * a + b, 2), Fraction(b, 2)) for a, b in sites]
        classes = set()
        for p, q, r in combinations(xy, 3):
            if (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) == 0:
                continue
            d = lambda u, v: (u[0] - v[0]) ** 2 + 3 * (u[1] - v[1]) ** 2  # noqa: E731
            classes.add(tuple(sorted((d(p, q), d(q, r), d(p, r)))))
        return len(classes)

    def congruent(self, s: Sequence[int], t: Sequence[int]) -> bool:
        if len(s) != len(t):
            return False
        if self.kind == GRID:
            return configurations_congruent([self.sites[i] for i in s], [self.sites[i] for i in t])
        if self.kind == CIRCLE:
            rim_s = [self.sites[i] for i in s if self.sites[i] is not None]
            rim_t = [self.sites[i] for i in t if self.sites[i] is not None]
            if len(rim_s) != len(rim_t):
                return False
            if len(rim_s) >= 3:
                return fractions_equivalent(rim_s, rim_t)
        return self._distance_bijection(s, t)

    def _distance_bijection(self, s: Sequence[int], t: Sequence[int]) -> bool:
        # a distance-preserving bijection between planar sets extends to an isometry
        rank = self._rank
        s, t = list(s), list(t)
        if sorted(rank[a][b] for a, b in combinations(s, 2)) != sorted(rank[a][b] for a, b in combinations(t, 2)):
            return False
        prof = lambda u, xs: sorted(rank[u][v] for v in xs if v != u)  # noqa: E731
        ps = [prof(u, s) for u in s]
        pt = [prof(u, t) for u in t]
        used = [False] * len(t)
        image: List[int] = []

        def extend(i: int) -> bool:
            if i == len(s):
                return True
            for j, cand in enumerate(t):
                if used[j] or ps[i] != pt[j]:
                    continue
                if all(rank[s[k]][s[i]] == rank[image[k]][cand] for k in range(i)):
                    used[j] = True
                    image.append(cand)
                    if extend(i + 1):
                        return True
                    image.pop()
                    used[j] = False
            return False

        return extend(0)

    def site_label(self, i: int):
        s = self.sites[i]
        if self.kind == GRID:
            return f"{s.x} {s.y}"
        if self.kind == CIRCLE:
            return "center" if s is None else str(s)
        return f"{s[0]} {s[1]}"

    def __getstate__(self):
        return {"kind": self.kind, "param": self.param, "with_center": self.with_center, "sites": self.sites}

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._compile()


def similarity_classes(ground: GroundSet, witnesses: Sequence[Tuple[int, ...]]) -> Optional[int]:
    """Number of witnesses left after merging those equal up to uniform scaling.

    Only defined for rational grids; circle and lattice witnesses are
    reported up to congruence alone.
    """
    if ground.kind != GRID:
        return None
    reps: List[List[Point]] = []
    for w in witnesses:
        pts = [ground.sites[i] for i in w]
        if not any(len(r) == len(pts) and configurations_similar(r, pts) for r in reps):
            reps.append(pts)
    return len(reps)


def fractions_equivalent(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    """True iff ``b`` is a rotation of ``a`` or of its mirror image on the circle."""
    if len(a) != len(b):
        return False
    target = {f % 1 for f in b}
    b0 = min(target)
    for f in a:
        if {(x - f + b0) % 1 for x in a} == target:
            return True
        if {(f - x + b0) % 1 for x in a} == target:
            return True
    return False


def build_ground_set(kind: str, k: Optional[int] = None, D: Optional[int] = None,
                     r: Optional[int] = None, with_center: bool = False) -> GroundSet:
    """Construct a ground set in canonical site order.

    * ``grid``: the ``k x k`` integer grid, row-major (x varies fastest).
    * ``circle``: the D-th turn-fractions ``0, 1/D, ...`` in increasing order,
      then the centre if requested.
    * ``lattice``: triangular-lattice points ``(a, b)`` with norm
      ``a² + ab + b² <= r²``, ordered by norm, then counterclockwise angle
      from the positive x-axis.
    """
    kind = KIND_ALIASES.get(kind.lower().replace("_", ""), kind)
    if kind == GRID:
        if k is None or k < 2:
            raise SearchError("grid side k must be at least 2")
        sites = tuple(Point(x, y) for y in range(k) for x in range(k))
        return GroundSet(GRID, k, False, sites)
    if kind == CIRCLE:
        if D is None or D < 3:
            raise SearchError("circle divisions D must be at least 3")
        sites = tuple(Fraction(i, D) for i in range(D))
        if with_center:
            sites += (None,)
        return GroundSet(CIRCLE, D, with_center, sites)
    if kind == LATTICE:
        if r is None or r < 1:
            raise SearchError("lattice radius r must be at least 1")
        pts = [(a, b) for a in range(-2 * r, 2 * r + 1) for b in range(-2 * r, 2 * r + 1)
               if eisenstein_norm(a, b) <= r * r]
        angle = functools.cmp_to_key(_lattice_angle_cmp)
        pts.sort(key=lambda p: (eisenstein_norm(*p), angle(p)))
        return GroundSet(LATTICE, r, False, tuple(pts))
    raise SearchError(f"unknown ground set kind {kind!r}")


@dataclass
class SearchResult:
    ground: str
    n: int
    best_count: Optional[int]
    witnesses: List[Tuple[int, ...]]
    nodes_explored: int
    exhaustive: bool
    cutoff: Optional[int] = None

    def to_dict(self, ground: Optional[GroundSet] = None) -> dict:
        d = {
            "ground": self.ground,
            "n": self.n,
            "best_count": self.best_count,
            "witnesses": [list(w) for w in self.witnesses],
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "cutoff": self.cutoff,
        }
        if ground is not None:
            d["witness_sites"] = [[ground.site_label(i) for i in w] for w in self.witnesses]
        return d


class _Search:
    """One depth-first run. ``exact`` switches from minimising to collecting
    subsets whose count equals ``target``."""

    def __init__(self, ground: GroundSet, n: int, *, cutoff: Optional[int], exact: Optional[int],
                 budget: Optional[int], max_witnesses: int):
        self.g = ground
        self.n = n
        self.exact = exact
        self.budget = budget
        self.max_witnesses = max_witnesses
        self.best = exact if exact is not None else (cutoff if cutoff is not None else 1 << 60)
        self.found = False
        self.witnesses: List[Tuple[int, ...]] = []
        self.nodes = 0
        self.present = [False] * (ground.num_classes + 1)
        self.present[0] = True

    def limit(self) -> int:
        if self.exact is None and self.found and len(self.witnesses) >= self.max_witnesses:
            return self.best - 1
        return self.best

    def leaf(self, subset: Tuple[int, ...], count: int) -> None:
        if count == 0:
            return  # all sites on one line
        if self.exact is not None:
            if count == self.exact:
                self.found = True
                self._add_witness(subset)
            return
        if not self.found or count < self.best:
            self.best = count
            self.found = True
            self.witnesses = [subset]
        elif count == self.best:
            self._add_witness(subset)

    def _add_witness(self, subset: Tuple[int, ...]) -> None:
        if len(self.witnesses) >= self.max_witnesses:
            return
        if any(self.g.congruent(w, subset) for w in self.witnesses):
            return
        self.witnesses.append(subset)

    def run(self, roots: Optional[Sequence[int]] = None) -> None:
        m = len(self.g)
        if roots is None:
            self._rec([], list(range(m)), [frozenset()] * m, 0)
            return
        # fan-out entry: subsets whose smallest site is in ``roots``
        for c in roots:
            self._branch([], c, list(range(c + 1, m)), [frozenset()] * (m - c - 1), 0)

    def _rec(self, chosen: List[int], cands: List[int], pend: list, count: int) -> None:
        need = self.n - len(chosen)
        present = self.present
        for i, c in enumerate(cands):
            if len(cands) - i < need:
                return
            new = [cid for cid in pend[i] if not present[cid]]
            if count + len(new) > self.limit():
                continue
            self._expand(chosen, c, cands[i + 1:], pend[i + 1:], count, new)

    def _branch(self, chosen, c, rest, rest_pend, count) -> None:
        self._expand(chosen, c, rest, rest_pend, count, [])

    def _expand(self, chosen, c, rest, rest_pend, count, new) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded
        present = self.present
        need = self.n - len(chosen) - 1
        newcount = count + len(new)
        for cid in new:
            present[cid] = True
        try:
            if need == 0:
                self.leaf(tuple(chosen) + (c,), newcount)
                return
            tri_c = self.g._tri[c]
            lim = self.limit()
            child_c: List[int] = []
            child_p: list = []
            for d, pd in zip(rest, rest_pend):
                row = tri_c
                extra = {row[a][d] for a in chosen}
                pj = pd | extra if extra else pd
                if newcount + sum(1 for cid in pj if not present[cid]) <= lim:
                    child_c.append(d)
                    child_p.append(pj)
            if len(child_c) >= need:
                self._rec(chosen + [c], child_c, child_p, newcount)
        finally:
            for cid in new:
                present[cid] = False


def _run_roots(ground: GroundSet, n: int, roots: Sequence[int], cutoff, exact, max_witnesses):
    s = _Search(ground, n, cutoff=cutoff, exact=exact, budget=None, max_witnesses=max_witnesses)
    s.run(roots)
    return s.found, s.best, s.witnesses, s.nodes


def _search(ground: GroundSet, n: int, *, cutoff=None, exact=None, budget=None,
            max_witnesses=DEFAULT_WITNESSES, jobs: int = 1) -> SearchResult:
    if n > len(ground):
        raise SearchError(f"n={n} exceeds the {len(ground)} sites of {ground.describe()}")
    if n < 1:
        raise SearchError("n must be positive")
    if jobs > 1 and budget is None:
        return _search_parallel(ground, n, cutoff, exact, max_witnesses, jobs)
    s = _Search(ground, n, cutoff=cutoff, exact=exact, budget=budget, max_witnesses=max_witnesses)
    exhaustive = True
    try:
        s.run()
    except BudgetExceeded:
        exhaustive = False
        s.nodes = budget
        log.info("search over %s truncated at %d nodes", ground.describe(), budget)
    best = (exact if s.found else None) if exact is not None else (s.best if s.found else None)
    return SearchResult(ground.describe(), n, best, s.witnesses, s.nodes, exhaustive,
                        cutoff if exact is None else exact)


def _search_parallel(ground, n, cutoff, exact, max_witnesses, jobs) -> SearchResult:
    roots = list(range(len(ground) - n + 1))
    chunks = [roots[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_run_roots, *zip(*[(ground, n, ch, cutoff, exact, max_witnesses) for ch in chunks])))
    nodes = sum(p[3] for p in parts)
    found = [p for p in parts if p[0]]
    if not found:
        return SearchResult(ground.describe(), n, None, [], nodes, True, cutoff if exact is None else exact)
    best = exact if exact is not None else min(p[1] for p in found)
    candidates = sorted(w for p in found if p[1] == best for w in p[2])
    witnesses: List[Tuple[int, ...]] = []
    for w in candidates:
        if len(witnesses) >= max_witnesses:
            break
        if not any(ground.congruent(v, w) for v in witnesses):
            witnesses.append(w)
    return SearchResult(ground.describe(), n, best, witnesses, nodes, True, cutoff if exact is None else exact)


def min_triangles(ground: GroundSet, n: int, budget: Optional[int] = None, *,
                  cutoff: Optional[int] = None, max_witnesses: int = DEFAULT_WITNESSES,
                  jobs: int = 1) -> SearchResult:
    """Minimum number of distinct triangles over all ``n``-subsets of ``ground``.

    ``budget`` caps the number of search nodes; a truncated run reports
    ``exhaustive=False``. ``cutoff`` restricts attention to subsets with at
    most that many classes: if none exists, ``best_count`` is None and the
    run still proves it (``exhaustive=True``).
    """
    return _search(ground, n, cutoff=cutoff, budget=budget, max_witnesses=max_witnesses, jobs=jobs)


def exactly_t_subsets(ground: GroundSet, n: int, t: int, budget: Optional[int] = None, *,
                      max_witnesses: int = DEFAULT_WITNESSES, jobs: int = 1) -> SearchResult:
    return _search(ground, n, exact=t, budget=budget, max_witnesses=max_witnesses, jobs=jobs)


def brute_force_min(ground: GroundSet, n: int) -> Tuple[Optional[int], List[Tuple[int, ...]]]:
    """Unpruned reference: every ``n``-subset, recounted from the exact oracles."""
    best = None
    best_subsets: List[Tuple[int, ...]] = []
    for subset in combinations(range(len(ground)), n):
        classes = set()
        for i, j, k in combinations(subset, 3):
            if not ground.is_collinear(i, j, k):
                classes.add(tuple(sorted(ground.length_key(a, b).value for a, b in ((i, j), (j, k), (i, k)))))
        c = len(classes)
        if c == 0:
            continue
        if best is None or c < best:
            best, best_subsets = c, [subset]
        elif c == best:
            best_subsets.append(subset)
    return best, best_subsets


@dataclass
class FRow:
    t: int
    max_n: Optional[int]
    witness: Optional[Tuple[int, ...]]
    exhaustive_over: str
    exhaustive: bool = True
    witnesses: List[Tuple[int, ...]] = field(default_factory=list)

    def to_dict(self, ground: Optional[GroundSet] = None) -> dict:
        d = {
            "t": self.t,
            "max_n": self.max_n,
            "witness": list(self.witness) if self.witness is not None else None,
            "exhaustive_over": self.exhaustive_over,
            "exhaustive": self.exhaustive,
        }
        if ground is not None and self.witness is not None:
            d["witness_sites"] = [ground.site_label(i) for i in self.witness]
        return d


def max_points_with_exactly(ground: GroundSet, t: int, budget: Optional[int] = None, *,
                            max_witnesses: int = DEFAULT_WITNESSES, jobs: int = 1) -> FRow:
    """Largest ``n`` such that some ``n``-subset has exactly ``t`` classes."""
    if t < 1:
        raise SearchError("t must be at least 1")
    exhaustive = True
    for n in range(len(ground), 2, -1):
        res = exactly_t_subsets(ground, n, t, budget, max_witnesses=max_witnesses, jobs=jobs)
        exhaustive = exhaustive and res.exhaustive
        if res.witnesses:
            return FRow(t, n, res.witnesses[0], ground.describe(), exhaustive, res.witnesses)
    return FRow(t, None, None, ground.describe(), exhaustive)


def f_table(ground: GroundSet, ts: Sequence[int], **kwargs) -> List[FRow]:
    return [max_points_with_exactly(ground, t, **kwargs) for t in ts]


def regular_ngon_sites(ground: GroundSet, n: int) -> Optional[Tuple[int, ...]]:
    """Site indices of the regular n-gon through fraction 0, if the ground contains it."""
    if ground.kind != CIRCLE or ground.param % n:
        return None
    step = ground.param // n
    return tuple(range(0, ground.param, step))


def conjecture_evidence(name: str, grounds: Sequence[GroundSet], ns: Sequence[int] = (7,),
                        *, jobs: int = 1, progress: Optional[Callable[[str], None]] = None) -> dict:
    """Scan ground sets for evidence about the two conjectures.

    ``seven_points``: every 7-subset has at least four classes.
    ``regular_polygon_optimal``: for each ``n``, no ``n``-subset beats the
    regular n-gon's count.

    Results hold only over the scanned ground sets; each check carries that
    qualifier.
    """
    checks = []
    if name == "seven_points":
        for g in grounds:
            res = min_triangles(g, 7, jobs=jobs)
            ok = res.best_count is not None and res.best_count >= 4
            checks.append({
                "ground": g.describe(), "n": 7, "min_found": res.best_count, "required": 4,
                "ok": ok, "exhaustive": res.exhaustive,
                "qualifier": f"exhaustive over {g.describe()}" if res.exhaustive else "truncated",
            })
            if progress:
                progress(f"{g.describe()} n=7 min={res.best_count}")
    elif name == "regular_polygon_optimal":
        for g in grounds:
            for n in ns:
                if n > len(g):
                    continue
                target = ngon_triangle_count(n)
                res = min_triangles(g, n, jobs=jobs)
                ngon = regular_ngon_sites(g, n)
                entry = {
                    "ground": g.describe(), "n": n, "min_found": res.best_count, "required": target,
                    "ok": res.best_count is not None and res.best_count >= target,
                    "exhaustive": res.exhaustive,
                    "qualifier": f"exhaustive over {g.describe()}" if res.exhaustive else "truncated",
                }
                if ngon is not None:
                    entry["ngon_count"] = g.count(ngon)
                    entry["ngon_attains_min"] = g.count(ngon) == res.best_count == target
                if not entry["ok"]:
                    log.error("VIOLATION: %s n=%d has a subset with %s < %d classes",
                              g.describe(), n, res.best_count, target)
                checks.append(entry)
                if progress:
                    progress(f"{g.describe()} n={n} min={res.best_count} target={target}")
    else:
        raise SearchError(f"unknown conjecture {name!r}")
    return {"conjecture": name, "ok": all(c["ok"] for c in checks), "checks": checks}
