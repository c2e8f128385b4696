"""Proper and complete colorings of convex complete geometric graphs.

Vertices are the labels ``1..n`` of a convex point set in clockwise order.
The coloring uses floor((n^2+n)/4) colors, the largest number any complete
coloring of an ``n``-point geometric graph can have.  All index arithmetic
is cyclic; :func:`wrap` is the only place that maps residues to labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import EvenOrderRequired, InvalidOrder, NotConvex, UseK4Variant
from .geometry import PointSet, Relation, clockwise_labels, is_convex_position, orient, regular_polygon
from .graph import Coloring, EdgeId, GeometricGraph, complete_geometric, edge, is_thrackle

KINDS = ("halving", "pair", "almost", "repair")


def wrap(v: int, n: int) -> int:
    """Map any integer to the label in ``1..n`` congruent to it mod ``n``."""
    return (v - 1) % n + 1


def cyc_edge(n: int, a: int, b: int) -> EdgeId:
    return edge(wrap(a, n), wrap(b, n))


def residue(n: int, e: EdgeId) -> int:
    """The ``k`` in ``1..n//2`` with ``j - i = +-k (mod n)``."""
    d = (e.j - e.i) % n
    return min(d, n - d)


def is_halving_edge(n: int, e: EdgeId) -> bool:
    """Both open sides of the edge's line hold at least ``(n-2)//2`` of the ``n`` convex points."""
    d = (e.j - e.i) % n
    need = (n - 2) // 2
    return d - 1 >= need and n - d - 1 >= need


def is_halving_edge_geometric(S: PointSet, e: EdgeId) -> bool:
    """Same predicate, counted with orientation tests on the actual points."""
    a, b = S[e.i], S[e.j]
    sides = [orient(a, b, S[v]) for v in range(1, len(S) + 1) if v not in (e.i, e.j)]
    need = (len(S) - 2) // 2
    return sides.count(1) >= need and sides.count(-1) >= need


def is_almost_halving_edge(n: int, e: EdgeId) -> bool:
    """``e = e_{i,j}`` with ``e_{i,j+1}`` halving, for either orientation of ``e``."""
    if n % 2:
        raise EvenOrderRequired(f"almost-halving edges are defined for even n only, got n={n}")
    return any(
        is_halving_edge(n, cyc_edge(n, u, v + 1)) for u, v in ((e.i, e.j), (e.j, e.i)) if wrap(v + 1, n) != u
    )


def convex_relation(n: int, e: EdgeId, f: EdgeId) -> Relation:
    """Relation of two chords of a convex ``n``-gon from their labels alone."""
    if e == f:
        raise ValueError("same edge")
    if {e.i, e.j} & {f.i, f.j}:
        return Relation.SHARED_ENDPOINT
    inside = (e.i < f.i < e.j) != (e.i < f.j < e.j)
    return Relation.CROSSING if inside else Relation.DISJOINT


@dataclass(frozen=True)
class CirculantClass:
    """The edges ``e_{i,j}`` with ``j - i = +-k (mod n)`` for some ``k`` in ``J``."""

    n: int
    J: tuple[int, ...]

    @property
    def edges(self) -> list[EdgeId]:
        out = []
        seen = set()
        for k in self.J:
            for a in range(1, self.n + 1):
                e = cyc_edge(self.n, a, a + k)
                if e not in seen:
                    seen.add(e)
                    out.append(e)
        return out


def circulant_partition(n: int) -> list[CirculantClass]:
    """Split ``E(K_n)`` into the halving class, the next class, and paired residues."""
    if n < 3:
        raise InvalidOrder(f"n must be at least 3, got {n}")
    h = n // 2
    parts = [CirculantClass(n, (h,))]
    if h - 1 >= 1:
        parts.append(CirculantClass(n, (h - 1,)))
    for i in range(1, (h - 1) // 2 + 1):
        i2 = h - 1 - i
        parts.append(CirculantClass(n, (i,) if i == i2 else (i, i2)))
    return parts


@dataclass(frozen=True)
class HalvingPair:
    first: EdgeId
    second: EdgeId
    witness: EdgeId


def halving_pair(n: int, x: int, s: int, t: int, witness: tuple[int, int]) -> HalvingPair:
    """The pair ``(e_{x,x+s}, e_{x+s+1,x+s+1+t})`` with the stated witness.

    The witness must be one of the three admissible chords and halving; the
    two edges must be disjoint.  Failure means an indexing error.
    """
    i, j, k = x, x + s, x + s + 1 + t
    first, second = cyc_edge(n, i, j), cyc_edge(n, j + 1, k)
    w = cyc_edge(n, *witness)
    candidates = {cyc_edge(n, i, j + 1), cyc_edge(n, i, k), cyc_edge(n, j, k)}
    assert w in candidates, (n, first, second, w)
    assert is_halving_edge(n, w), (n, w)
    assert convex_relation(n, first, second) is Relation.DISJOINT, (n, first, second)
    return HalvingPair(first, second, w)


@dataclass
class ColorClass:
    color: int
    edges: list[EdgeId]
    kind: str
    witness: EdgeId | None = None

    def to_json(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "kind": self.kind,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass
class ConstructionTrace:
    n: int
    case: str
    partition: list[CirculantClass]
    N1: int
    N2: int
    N3: int
    classes: list[ColorClass] = field(default_factory=list)
    repairs: list[tuple[EdgeId, int]] = field(default_factory=list)

    def pairs(self) -> list[HalvingPair]:
        out = []
        for c in self.classes:
            if c.kind == "pair":
                out.append(HalvingPair(c.edges[0], c.edges[1], c.witness))
        return out

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "N1": self.N1,
            "N2": self.N2,
            "N3": self.N3,
            "classes": [c.to_json() for c in self.classes],
        }


class _Builder:
    def __init__(self, n: int) -> None:
        self.n = n
        self.classes: dict[int, ColorClass] = {}
        self.owner: dict[EdgeId, int] = {}

    def _claim(self, e: EdgeId, color: int) -> None:
        if e in self.owner:
            raise AssertionError(f"n={self.n}: edge {e} colored twice ({self.owner[e]} and {color})")
        self.owner[e] = color

    def single(self, color: int, a: int, b: int, kind: str, witness: EdgeId | None = None) -> None:
        e = cyc_edge(self.n, a, b)
        if kind == "halving":
            assert is_halving_edge(self.n, e), (self.n, e)
        self._claim(e, color)
        self.classes[color] = ColorClass(color, [e], kind, witness)

    def pair(self, color: int, x: int, s: int, t: int, witness: tuple[int, int]) -> None:
        hp = halving_pair(self.n, x, s, t, witness)
        self._claim(hp.first, color)
        self._claim(hp.second, color)
        self.classes[color] = ColorClass(color, [hp.first, hp.second], "pair", hp.witness)

    def repair(self, color: int, a: int, b: int) -> EdgeId:
        e = cyc_edge(self.n, a, b)
        cls = self.classes[color]
        for other in cls.edges:
            assert convex_relation(self.n, e, other) is Relation.DISJOINT, (self.n, e, other)
        self._claim(e, color)
        halving = cls.edges[0]
        cls.edges.append(e)
        cls.kind = "repair"
        cls.witness = halving
        return e


def _leading_pairs(b: _Builder, n: int, h: int) -> int:
    """Color ``C_n({i, i'})`` for every ``i`` but the last; returns ``N1``."""
    imax = (h - 1) // 2
    for i in range(1, imax):
        i2 = h - 1 - i
        for j in range(1, n + 1):
            b.pair((i - 1) * n + j, j, i, i2, witness=(j, j + h))
    return n * (imax - 1)


def _construct(n: int) -> ConstructionTrace:
    h = n // 2
    b = _Builder(n)
    N1 = _leading_pairs(b, n, h)
    i = (h - 1) // 2
    i2 = h - 1 - i
    i3 = h - 1
    repairs: list[tuple[EdgeId, int]] = []

    if n % 2:
        # odd: the n halving edges form a maximal thrackle, one color each
        for j in range(1, n + 1):
            b.single(N1 + j, j, j + h, "halving")
        N2 = N1 + n
        if i == i2:
            case = "odd-a"
            for j in range(1, n + 1):
                b.pair(N2 + j, j, i, i3, witness=(j + i, j + i + 1 + i3))
            N3 = N2 + n
        else:
            case = "odd-b"
            for j in range(1, n + 1):
                b.pair(N2 + j, j, i, i2, witness=(j, j + i + 1 + i2))
            for j in range(1, h + 1):
                b.pair(N2 + n + j, j, i3, i3, witness=(j, j + i3 + 1))
            N3 = N2 + n + h
            repairs.append((b.repair(N1 + h, n, h - 1), N1 + h))
    else:
        # even: halving edges plus the first half of the almost-halving edges
        for j in range(1, h + 1):
            b.single(N1 + j, j, j + h, "halving")
        for j in range(1, h + 1):
            b.single(N1 + h + j, j, j + h - 1, "almost", witness=cyc_edge(n, j, j + h))
        N2 = N1 + n
        if i == i2:
            case = "even-a"
            for j in range(1, h + 1):
                x = h + j
                b.pair(N2 + j, x, i3, i, witness=(x, x + i3 + 1))
            for j in range(1, n // 4 + 1):
                x = h + j
                b.pair(N2 + h + j, x, i, i, witness=(x, x + 2 * i + 1))
            N3 = N2 + h + n // 4
            repairs.append((b.repair(N1 + 1, h + n // 4 + 1, n), N1 + 1))
        else:
            case = "even-b"
            q = n // 4
            for j in range(1, q + 1):
                x = h + j
                b.pair(N2 + j, x, i3, i, witness=(x, x + i3 + 1))
            for j in range(1, q + 1):
                x = 3 * q + j
                b.pair(N2 + q + j, x, i3, i2, witness=(x, x + i3 + 1))
            for j in range(1, 3 * q + 1):
                x = q + j
                b.pair(N2 + h + j, x, i, i2, witness=(x, x + i + 1 + i2))
            N3 = N2 + h + 3 * q

    trace = ConstructionTrace(
        n=n,
        case=case,
        partition=circulant_partition(n),
        N1=N1,
        N2=N2,
        N3=N3,
        classes=[b.classes[c] for c in sorted(b.classes)],
        repairs=repairs,
    )
    assert sorted(b.classes) == list(range(1, N3 + 1)), (n, "colors not consecutive")
    assert len(b.owner) == n * (n - 1) // 2, (n, "not every edge colored", len(b.owner))
    return trace


# n = 5: e13, e35, e41, e52 get colors 1-4, then {e12, e34}, {e23, e45}, {e24, e15}
_K5_CLASSES = [
    ([(1, 3)], "halving"),
    ([(3, 5)], "halving"),
    ([(4, 1)], "halving"),
    ([(5, 2)], "halving"),
    ([(1, 2), (3, 4)], "pair"),
    ([(2, 3), (4, 5)], "pair"),
    ([(2, 4), (1, 5)], "pair"),
]


def _small_trace(n: int) -> ConstructionTrace:
    if n == 5:
        classes = []
        for c, (members, kind) in enumerate(_K5_CLASSES, start=1):
            es = [edge(*m) for m in members]
            witness = None
            if kind == "pair":
                witness = next(
                    w
                    for w in (cyc_edge(5, members[0][0], members[1][0]), cyc_edge(5, members[0][1], members[1][1]),
                              cyc_edge(5, members[0][0], members[1][1]), cyc_edge(5, members[0][1], members[1][0]))
                    if is_halving_edge(5, w)
                )
            classes.append(ColorClass(c, es, kind, witness))
    else:
        es = [edge(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        classes = [ColorClass(c, [e], "halving") for c, e in enumerate(es, start=1)]
    k = len(classes)
    return ConstructionTrace(n=n, case="small", partition=circulant_partition(n), N1=0, N2=0, N3=k, classes=classes)


def _relabel(S: PointSet | None, n: int) -> tuple[GeometricGraph, list[int]]:
    if S is None:
        S = regular_polygon(n)
        return complete_geometric(S), list(range(1, n + 1))
    if len(S) != n:
        raise ValueError(f"expected {n} points, got {len(S)}")
    if not is_convex_position(S):
        raise NotConvex("points are not in convex position")
    return complete_geometric(S), clockwise_labels(S)


def color_convex(n: int, points: PointSet | None = None) -> tuple[Coloring, ConstructionTrace]:
    """Proper, complete coloring of convex ``K_n`` with floor((n^2+n)/4) colors.

    With ``points`` given, the construction runs on their clockwise order
    and the coloring refers to the original labels; the trace always uses
    clockwise positions.
    """
    if n < 3:
        raise InvalidOrder(f"n must be at least 3, got {n}")
    if n == 4:
        raise UseK4Variant("K4 has no coloring with 5 proper colors; use color_k4()")
    trace = _small_trace(n) if n <= 5 else _construct(n)
    graph, cw = _relabel(points, n)
    to_label = {pos: cw[pos - 1] for pos in range(1, n + 1)}
    color_of = {}
    for cls in trace.classes:
        for e in cls.edges:
            color_of[edge(to_label[e.i], to_label[e.j])] = cls.color
    return Coloring(graph, color_of), trace


def color_k4(points: PointSet | None = None) -> tuple[Coloring, Coloring]:
    """The two K4 colorings: complete with 5 colors, and proper and complete with 4."""
    graph, cw = _relabel(points, 4)
    lab = {pos: cw[pos - 1] for pos in range(1, 5)}

    def build(classes: Iterable[Iterable[tuple[int, int]]]) -> Coloring:
        return Coloring.from_classes(graph, [[edge(lab[a], lab[b]) for a, b in cls] for cls in classes])

    psi = build([[(3, 4), (4, 1)], [(1, 2)], [(2, 3)], [(1, 3)], [(2, 4)]])
    alpha = build([[(1, 2), (3, 4)], [(2, 3), (4, 1)], [(1, 3)], [(2, 4)]])
    return psi, alpha


def max_thrackle_check(G: GeometricGraph, edges: Iterable[EdgeId]) -> bool:
    """True iff ``edges`` is a thrackle; thrackles never exceed ``n`` edges."""
    edges = [edge(*e) for e in edges]
    ok = is_thrackle(G, edges)
    if ok:
        assert len(edges) <= G.n, "thrackle larger than n would have two disjoint edges"
    return ok


def color_count(n: int) -> int:
    return (n * n + n) // 4
