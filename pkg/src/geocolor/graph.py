"""Geometric graphs, edge colorings and the proper/complete verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import GeneralPositionViolated, MalformedColoring, NotComplete
from .geometry import PointSet, Relation, orientation_table


class EdgeId(NamedTuple):
    """Edge between vertex labels ``i < j`` (1-based)."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"e{self.i},{self.j}"


def edge(u: int, v: int) -> EdgeId:
    """Normalised edge id for the unordered pair ``{u, v}``."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return EdgeId(u, v) if u < v else EdgeId(v, u)


class IntersectionRelation:
    """Pairwise Disjoint / SharedEndpoint / Crossing codes for all edges of a graph.

    Built once with vectorised exact integer predicates: each edge is
    oriented against every point, and two edges cross iff each separates
    the endpoints of the other.
    """

    def __init__(self, graph: "GeometricGraph") -> None:
        self.graph = graph
        E = len(graph.edges)
        coords = graph.points.as_array()
        first = np.array([e.i - 1 for e in graph.edges], dtype=np.intp)
        second = np.array([e.j - 1 for e in graph.edges], dtype=np.intp)
        if E == 0:
            self.codes = np.zeros((0, 0), dtype=np.int8)
            return
        table = orientation_table(coords, first, second)
        if np.any(np.count_nonzero(table == 0, axis=1) != 2):
            raise GeneralPositionViolated("a point lies on the supporting line of an edge")
        s1 = table[:, first] * table[:, second]
        crossing = (s1 < 0) & (s1.T < 0)
        shared = (
            (first[:, None] == first[None, :])
            | (first[:, None] == second[None, :])
            | (second[:, None] == first[None, :])
            | (second[:, None] == second[None, :])
        )
        codes = np.where(shared, np.int8(Relation.SHARED_ENDPOINT), np.int8(Relation.DISJOINT))
        codes[crossing] = Relation.CROSSING
        np.fill_diagonal(codes, Relation.DISJOINT)
        codes.setflags(write=False)
        self.codes = codes

    @cached_property
    def intersects(self) -> np.ndarray:
        """Boolean matrix: edges ``a`` and ``b`` share an endpoint or cross (``a != b``)."""
        m = self.codes != Relation.DISJOINT
        m.setflags(write=False)
        return m

    def relation(self, e: EdgeId, f: EdgeId) -> Relation:
        idx = self.graph.index
        return Relation(int(self.codes[idx[e], idx[f]]))

    def count(self, kind: Relation) -> int:
        return int(np.count_nonzero(np.triu(self.codes == kind, k=1)))

    def masks(self) -> list[int]:
        """Per-edge bitmask (as Python ints) of the edges it intersects."""
        out = []
        for row in self.intersects:
            mask = 0
            for b in np.flatnonzero(row):
                mask |= 1 << int(b)
            out.append(mask)
        return out


@dataclass(eq=False)
class GeometricGraph:
    points: PointSet
    edges: tuple[EdgeId, ...]

    def __post_init__(self) -> None:
        self.edges = tuple(edge(*e) for e in self.edges)
        n = len(self.points)
        for e in self.edges:
            if not (1 <= e.i < e.j <= n):
                raise ValueError(f"edge {e} does not index into {n} points")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edge")

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def index(self) -> dict[EdgeId, int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def relation(self) -> IntersectionRelation:
        return IntersectionRelation(self)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            deg[e.i - 1] += 1
            deg[e.j - 1] += 1
        return deg


def complete_geometric(S: PointSet) -> GeometricGraph:
    n = len(S)
    return GeometricGraph(S, tuple(EdgeId(i, j) for i, j in combinations(range(1, n + 1), 2)))


def build_intersection_relation(G: GeometricGraph) -> IntersectionRelation:
    return G.relation


@dataclass(eq=False)
class Coloring:
    """Assignment of each edge of ``graph`` to a color ``1..k``."""

    graph: GeometricGraph
    color_of: dict[EdgeId, int]

    @classmethod
    def from_classes(cls, graph: GeometricGraph, classes: Iterable[Iterable[EdgeId]]) -> "Coloring":
        color_of: dict[EdgeId, int] = {}
        for c, members in enumerate(classes, start=1):
            for e in members:
                e = edge(*e)
                if e in color_of:
                    raise MalformedColoring(f"edge {e} assigned twice")
                color_of[e] = c
        return cls(graph, color_of)

    @property
    def k(self) -> int:
        return max(self.color_of.values(), default=0)

    def classes(self) -> list[list[EdgeId]]:
        """Members of each color, index ``c - 1`` for color ``c``, in graph edge order."""
        out: list[list[EdgeId]] = [[] for _ in range(self.k)]
        for e in self.graph.edges:
            if e in self.color_of:
                out[self.color_of[e] - 1].append(e)
        return out

    def to_json(self) -> dict:
        return {
            "n": self.graph.n,
            "edges": [[e.i, e.j] for e in self.graph.edges],
            "colors": [self.color_of[e] for e in self.graph.edges],
        }

    @classmethod
    def from_json(cls, data: Mapping, points: PointSet) -> "Coloring":
        if data["n"] != len(points):
            raise MalformedColoring(f"coloring is for n={data['n']} but {len(points)} points given")
        if len(data["edges"]) != len(data["colors"]):
            raise MalformedColoring("edges and colors differ in length")
        graph = GeometricGraph(points, tuple(edge(*e) for e in data["edges"]))
        return cls(graph, {e: int(c) for e, c in zip(graph.edges, data["colors"])})


@dataclass
class VerificationReport:
    is_proper: bool
    is_complete: bool
    k: int
    singleton_classes: int
    proper_violations: list[tuple[EdgeId, EdgeId]] = field(default_factory=list)
    completeness_violations: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "is_proper": self.is_proper,
            "is_complete": self.is_complete,
            "k": self.k,
            "singleton_classes": self.singleton_classes,
            "proper_violations": [[list(a), list(b)] for a, b in self.proper_violations],
            "completeness_violations": [list(p) for p in self.completeness_violations],
        }


def _check_well_formed(c: Coloring) -> np.ndarray:
    G = c.graph
    if not G.edges:
        raise MalformedColoring("coloring of an empty edge set")
    extra = set(c.color_of) - set(G.index)
    if extra:
        raise MalformedColoring(f"colored edges not in the graph: {sorted(extra)[:3]}")
    missing = [e for e in G.edges if e not in c.color_of]
    if missing:
        raise MalformedColoring(f"{len(missing)} uncolored edges, e.g. {missing[0]}")
    colors = np.array([c.color_of[e] for e in G.edges], dtype=np.int64)
    k = int(colors.max())
    used = np.unique(colors)
    if used[0] < 1 or len(used) != k:
        raise MalformedColoring(f"colors must be exactly 1..{k}")
    return colors


def verify(c: Coloring) -> VerificationReport:
    """Check properness and completeness of a total, surjective coloring.

    Completeness is decided for all color pairs at once: the rows of the
    intersection matrix are OR-reduced per class, then the columns.
    """
    colors = _check_well_formed(c)
    G = c.graph
    inter = G.relation.intersects
    k = int(colors.max())

    order = np.argsort(colors, kind="stable")
    sorted_colors = colors[order]
    starts = np.flatnonzero(np.r_[True, sorted_colors[1:] != sorted_colors[:-1]])
    sizes = np.diff(np.r_[starts, len(order)])

    proper_violations: list[tuple[EdgeId, EdgeId]] = []
    for s, size in zip(starts, sizes):
        if size < 2:
            continue
        idx = order[s : s + size]
        sub = np.triu(inter[np.ix_(idx, idx)], k=1)
        for a, b in zip(*np.nonzero(sub)):
            proper_violations.append((G.edges[idx[a]], G.edges[idx[b]]))

    touches = np.logical_or.reduceat(inter[order], starts, axis=0)
    meets = np.logical_or.reduceat(touches[:, order], starts, axis=1)
    bad = np.argwhere(np.triu(~meets, k=1))
    completeness_violations = [(int(a) + 1, int(b) + 1) for a, b in bad]

    return VerificationReport(
        is_proper=not proper_violations,
        is_complete=not completeness_violations,
        k=k,
        singleton_classes=int(np.count_nonzero(sizes == 1)),
        proper_violations=proper_violations,
        completeness_violations=completeness_violations,
    )


def singleton_bound_holds(c: Coloring) -> bool:
    """At most ``n`` color classes of a complete coloring may have size one."""
    report = verify(c)
    if not report.is_complete:
        raise NotComplete("singleton bound applies to complete colorings only")
    return report.singleton_classes <= c.graph.n


def is_thrackle(G: GeometricGraph, edges: Sequence[EdgeId]) -> bool:
    """True iff every two of ``edges`` intersect."""
    idx = [G.index[edge(*e)] for e in edges]
    sub = G.relation.intersects[np.ix_(idx, idx)]
    return bool(np.all(sub | np.eye(len(idx), dtype=bool)))
