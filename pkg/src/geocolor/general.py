"""Partial complete colorings of K_n on arbitrary point sets in general position.

Write ``n = 13m + 6 + r``.  The top ``12m + 6`` points are split by three
concurrent lines into six wedges; ``2m`` points are kept in each wedge
(groups A..F, clockwise around the apex ``p``) and ``m`` points below form
group G.  Every quadrilateral ``a_i b_j d_i e_j`` (and its two rotations)
surrounds ``p``; adding one pendant edge into G makes any two of the
``12 m^2`` resulting subgraphs intersect, so each can get its own color.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import ApexNotInside, PreconditionFailed, SearchExhausted
from .geometry import COORD_BOUND, Line, Point, PointSet, cross, line_intersection, strictly_inside
from .graph import Coloring, EdgeId, GeometricGraph, edge, verify

log = logging.getLogger(__name__)

GROUP_NAMES = "ABCDEF"
# y' = K*y + x orders points by (y, x); an affine shear, so orientations are unchanged
SHEAR = 2 * COORD_BOUND + 1

RationalPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SixPartition:
    lines: tuple[Line, Line, Line]
    apex: RationalPoint
    # wedges in clockwise order around the apex, each as a clockwise list of indices into the input
    wedges: tuple[tuple[int, ...], ...]


def _direction_key(v: tuple[int, int]) -> tuple[int, int]:
    """Representative of ``v``'s direction modulo pi, in the upper half plane."""
    x, y = v
    return (x, y) if (y > 0 or (y == 0 and x > 0)) else (-x, -y)


def _angle_sorted(vectors: Sequence[tuple[int, int]]) -> list[int]:
    """Indices of ``vectors`` (all in one half plane) sorted counterclockwise."""
    from functools import cmp_to_key

    def cmp(a: int, b: int) -> int:
        c = cross((0, 0), vectors[a], vectors[b])
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(range(len(vectors)), key=cmp_to_key(cmp))


def wedge_counts(points: Sequence[Point], lines: Sequence[Line]) -> dict[tuple[int, ...], int]:
    """Points per open region of the arrangement, keyed by sign pattern; points on a line are dropped."""
    counts: dict[tuple[int, ...], int] = {}
    for q in points:
        key = tuple(l.side(q) for l in lines)
        if 0 in key:
            continue
        counts[key] = counts.get(key, 0) + 1
    return counts


def _try_apex(points: Sequence[Point], p: RationalPoint, need: int) -> SixPartition | None:
    d = p[0].denominator * p[1].denominator
    px, py = int(p[0] * d), int(p[1] * d)
    vecs: list[tuple[int, int]] = []
    idx: list[int] = []
    for k, q in enumerate(points):
        v = (q.x * d - px, q.y * d - py)
        if v != (0, 0):
            vecs.append(v)
            idx.append(k)
    if len(vecs) < 6 * need:
        return None
    keys = [_direction_key(v) for v in vecs]
    order = _angle_sorted(keys)
    # group equal directions (mod pi) into classes
    cls_of = [0] * len(vecs)
    reps: list[tuple[int, int]] = []
    for pos, a in enumerate(order):
        if pos and cross((0, 0), keys[order[pos - 1]], keys[a]) == 0:
            cls_of[a] = len(reps) - 1
        else:
            reps.append(keys[a])
            cls_of[a] = len(reps) - 1
    g = len(reps)
    if g < 3:
        return None
    # slot s in 0..2g-1: direction class s (upper) or s-g (opposite), counterclockwise
    slot_of = [cls_of[a] + (0 if keys[a] == vecs[a] else g) for a in range(len(vecs))]
    slot_count = np.bincount(slot_of, minlength=2 * g)
    prefix = np.concatenate([[0], np.cumsum(np.concatenate([slot_count, slot_count]))])

    def span(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        # points in slots lo+1..hi (lo < hi <= lo + 2g)
        return prefix[hi + 1] - prefix[lo + 1]

    t = np.array(list(combinations(range(g), 3)), dtype=np.int64)
    if t.size == 0:
        return None
    t1, t2, t3 = t[:, 0], t[:, 1], t[:, 2]
    counts = np.stack(
        [
            span(t1, t2),
            span(t2, t3),
            span(t3, t1 + g),
            span(t1 + g, t2 + g),
            span(t2 + g, t3 + g),
            span(t3 + g, t1 + 2 * g),
        ],
        axis=1,
    )
    ok = np.flatnonzero(np.all(counts >= need, axis=1))
    if ok.size == 0:
        return None
    # most balanced choice first; ties broken by index for determinism
    best = int(ok[np.argmax(counts[ok].min(axis=1))])
    gaps = [int(v) for v in t[best]]

    def gap_dir(s: int) -> tuple[int, int]:
        u = reps[s]
        w = reps[s + 1] if s + 1 < g else (-reps[0][0], -reps[0][1])
        return (u[0] + w[0], u[1] + w[1])

    dirs = [gap_dir(s) for s in gaps]
    lines = tuple(Line.through(p, dv) for dv in dirs)

    # rays counterclockwise: gap s at slot boundary s, its opposite at s+g
    bounds = sorted([s for s in gaps] + [s + g for s in gaps])
    ray_dir = {s: dirs[k] for k, s in enumerate(gaps)}
    ray_dir.update({s + g: (-dirs[k][0], -dirs[k][1]) for k, s in enumerate(gaps)})
    members: list[list[int]] = [[] for _ in range(6)]
    for a in range(len(vecs)):
        s = slot_of[a]
        w = next((w for w in range(6) if _in_cyclic(s, bounds[w], bounds[(w + 1) % 6], 2 * g)), None)
        members[w].append(a)
    ccw_wedges = []
    for w in range(6):
        ordered = sorted(members[w], key=lambda a: (slot_of[a] - bounds[w] - 1) % (2 * g))
        # same slot means same direction from p; order within a slot by distance is irrelevant for angle
        ccw_wedges.append([idx[a] for a in ordered])
    start_rays = [ray_dir[bounds[w]] for w in range(6)]
    up = (0, 1)
    first = next(
        w
        for w in range(6)
        if _ray_contains(start_rays[w], start_rays[(w + 1) % 6], up)
    )
    # counterclockwise wedge list starting at `first`, then reversed to clockwise
    ccw = [ccw_wedges[(first + k) % 6] for k in range(6)]
    cw = [ccw[0]] + ccw[:0:-1]
    wedges = tuple(tuple(reversed(wd)) for wd in cw)
    return SixPartition(lines, p, wedges)


def _in_cyclic(s: int, lo: int, hi: int, period: int) -> bool:
    """Slot ``s`` lies in lo+1..hi, cyclically."""
    return 0 < (s - lo) % period <= (hi - lo) % period


def _ray_contains(r0: tuple[int, int], r1: tuple[int, int], u: tuple[int, int]) -> bool:
    """``u`` is in the half-open wedge from ray ``r0`` (inclusive) counterclockwise to ``r1``."""
    c0 = cross((0, 0), r0, u)
    c1 = cross((0, 0), u, r1)
    if c0 == 0:
        return r0[0] * u[0] + r0[1] * u[1] > 0
    return c0 > 0 and c1 > 0


def _candidate_apexes(points: Sequence[Point]):
    """Centroid first, then crossings of nearly halving point-pair lines, nearest the centroid first."""
    n = len(points)
    cx = Fraction(sum(q.x for q in points), n)
    cy = Fraction(sum(q.y for q in points), n)
    yield (cx, cy)
    balanced: list[Line] = []
    for a, b in combinations(range(n), 2):
        left = sum(1 for q in points if cross(points[a], points[b], q) > 0)
        if abs(2 * left - (n - 2)) <= 2:
            pa, pb = points[a], points[b]
            balanced.append(Line.through(pa, (pb.x - pa.x, pb.y - pa.y)))
    pts = set()
    for l1, l2 in combinations(balanced, 2):
        x = line_intersection(l1, l2)
        if x is not None:
            pts.add(x)
    fx, fy = float(cx), float(cy)
    yield from sorted(pts, key=lambda q: ((float(q[0]) - fx) ** 2 + (float(q[1]) - fy) ** 2, q))


def six_partition(S: PointSet | Sequence[Point], need: int | None = None, max_apexes: int = 5000) -> SixPartition:
    """Three concurrent lines leaving at least ``need`` points in each open wedge.

    ``need`` defaults to ``len(S) // 6 - 1``.  Apex candidates are the
    centroid followed by crossings of nearly halving point-pair lines,
    nearest to the centroid first; for each apex all triples of line
    directions are scored at once.  The result is re-checked by counting
    sign patterns of the three lines.
    """
    points = list(S.points if isinstance(S, PointSet) else S)
    if len(points) < 6:
        raise PreconditionFailed("six-partition needs at least 6 points")
    if need is None:
        need = len(points) // 6 - 1
    tried = 0
    for tried, p in enumerate(_candidate_apexes(points)):
        if tried >= max_apexes:
            break
        part = _try_apex(points, p, need)
        if part is None:
            continue
        _recheck(points, part, need)
        log.debug("six-partition found at candidate %d", tried)
        return part
    raise SearchExhausted(f"no apex among {min(tried + 1, max_apexes)} candidates gives {need} points per wedge")


def _recheck(points: Sequence[Point], part: SixPartition, need: int) -> None:
    """Confirm the search result by sign patterns of the three lines alone."""
    counts = wedge_counts(points, part.lines)
    if need > 0 and (len(counts) != 6 or min(counts.values()) < need):
        raise AssertionError(f"direct count contradicts the search at apex {part.apex}: {counts}")
    seen = set()
    for wedge in part.wedges:
        keys = {tuple(l.side(points[k]) for l in part.lines) for k in wedge}
        if len(keys) > 1 or keys & seen:
            raise AssertionError("wedge membership disagrees with the line arrangement")
        seen |= keys
    if sum(map(len, part.wedges)) != sum(counts.values()):
        raise AssertionError("wedge membership disagrees with the line arrangement")


def _shear_key(q: Point) -> int:
    return SHEAR * q.y + q.x


@dataclass(frozen=True)
class LineConfiguration:
    """Three horizontal (after shear) lines, three concurrent lines, and the point groups."""

    m: int
    r: int
    l1: Line
    l2: Line
    l3: Line
    l4: Line
    l5: Line
    l6: Line
    p: RationalPoint
    a_prime: tuple[int, ...]
    b_prime: tuple[int, ...]
    groups: dict[str, tuple[int, ...]]

    def group(self, name: str) -> tuple[int, ...]:
        return self.groups[name]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "lines": {f"l{k}": l.as_triple() for k, l in enumerate((self.l1, self.l2, self.l3, self.l4, self.l5, self.l6), 1)},
            "apex": [str(self.p[0]), str(self.p[1])],
            "A_prime": list(self.a_prime),
            "B_prime": list(self.b_prime),
            "groups": {k: list(v) for k, v in self.groups.items()},
        }


def decompose(n: int) -> tuple[int, int]:
    """``(m, r)`` with ``n = 13m + 6 + r`` and ``0 <= r < 13``."""
    if n <= 18:
        raise PreconditionFailed(f"the construction needs n > 18 points, got {n}")
    m = (n - 6) // 13
    return m, n - 13 * m - 6


def _horizontal(key: int, doubled: bool = False) -> Line:
    # x + SHEAR*y = key   (or  2x + 2*SHEAR*y = key  when key is a doubled midpoint)
    return Line(2, 2 * SHEAR, key) if doubled else Line(1, SHEAR, key)


def build_configuration(S: PointSet) -> LineConfiguration:
    n = len(S)
    m, r = decompose(n)
    labels = sorted(range(1, n + 1), key=lambda v: _shear_key(S[v]), reverse=True)
    a_prime = labels[: 12 * m + 6]
    b_prime = labels[12 * m + 6 :]
    keys = [_shear_key(S[v]) for v in labels]
    l1 = _horizontal(keys[0] + 1)
    l2 = _horizontal(keys[12 * m + 5] + keys[12 * m + 6], doubled=True)
    l3 = _horizontal(keys[-1] - 1)

    part = six_partition([S[v] for v in a_prime], need=2 * m)
    groups: dict[str, tuple[int, ...]] = {}
    for name, wedge in zip(GROUP_NAMES, part.wedges):
        # keep the 2m angularly central points of the wedge
        lo = (len(wedge) - 2 * m) // 2
        groups[name] = tuple(a_prime[k] for k in wedge[lo : lo + 2 * m])
    groups["G"] = tuple(b_prime[-m:][::-1])
    l4, l5, l6 = part.lines
    return LineConfiguration(m, r, l1, l2, l3, l4, l5, l6, part.apex, tuple(a_prime), tuple(b_prime), groups)


@dataclass(frozen=True)
class PendantQuad:
    family: str
    i: int
    j: int
    cycle: tuple[int, int, int, int]
    pendant: EdgeId

    @property
    def quad(self) -> tuple[EdgeId, EdgeId, EdgeId, EdgeId]:
        c = self.cycle
        return tuple(edge(c[k], c[(k + 1) % 4]) for k in range(4))

    @property
    def edges(self) -> tuple[EdgeId, ...]:
        return self.quad + (self.pendant,)


# family -> (groups of the cycle with their index, vertex for even j, vertex for odd j)
_FAMILIES = {
    "X": (("A", "i"), ("B", "j"), ("D", "i"), ("E", "j")),
    "Y": (("B", "i"), ("C", "j"), ("E", "i"), ("F", "j")),
    "Z": (("C", "i"), ("D", "j"), ("F", "i"), ("A", "j")),
}


def enumerate_families(cfg: LineConfiguration, S: PointSet) -> list[PendantQuad]:
    """All ``12 m^2`` quadrilaterals with pendant edges, each checked to surround the apex."""
    m = cfg.m
    g = cfg.groups["G"]
    out: list[PendantQuad] = []
    used: set[EdgeId] = set()
    for fam, pattern in _FAMILIES.items():
        for i in range(1, 2 * m + 1):
            for j in range(1, 2 * m + 1):
                cycle = tuple(cfg.groups[grp][(i if which == "i" else j) - 1] for grp, which in pattern)
                # even j hangs the first cycle vertex on g_{j/2}; odd j the third on g_{(j+1)/2}
                if j % 2 == 0:
                    pendant = edge(cycle[0], g[j // 2 - 1])
                else:
                    pendant = edge(cycle[2], g[(j + 1) // 2 - 1])
                pq = PendantQuad(fam, i, j, cycle, pendant)
                if not strictly_inside(cfg.p, [S[v] for v in cycle]):
                    raise ApexNotInside(f"apex {cfg.p} not inside {fam}_{i},{j}")
                for e in pq.edges:
                    if e in used:
                        raise AssertionError(f"edge {e} used by two subgraphs")
                    used.add(e)
                out.append(pq)
    return out


@dataclass
class GeneralResult:
    coloring: Coloring
    k: int
    config: LineConfiguration
    quads: list[PendantQuad]


def color_general(S: PointSet) -> GeneralResult:
    """One color per pendant quadrilateral; the coloring covers only their edges.

    The result is checked: every two color classes must intersect.
    """
    cfg = build_configuration(S)
    quads = enumerate_families(cfg, S)
    graph = GeometricGraph(S, tuple(e for q in quads for e in q.edges))
    coloring = Coloring.from_classes(graph, [q.edges for q in quads])
    report = verify(coloring)
    if not report.is_complete:
        raise AssertionError(f"class pairs without intersection: {report.completeness_violations[:5]}")
    return GeneralResult(coloring, coloring.k, cfg, quads)
