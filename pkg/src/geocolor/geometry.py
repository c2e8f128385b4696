"""Exact planar predicates on integer points.

Everything here works on Python integers (or ``Fraction`` for the few
places where a derived point such as the apex of three concurrent lines is
rational), so no predicate ever depends on rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from .errors import GeneralPositionViolated, InputOutOfRange, InvalidOrder

COORD_BOUND = 2**24
"""Largest admissible coordinate magnitude.

Differences stay below 2**25, so every 2x2 determinant fits comfortably in
a signed 64-bit integer; the vectorised predicates depend on that.
"""

POLYGON_RADIUS = 10**6

Number = Union[int, Fraction]


class Point(NamedTuple):
    x: int
    y: int


class Segment(NamedTuple):
    a: Point
    b: Point


class Relation(enum.IntEnum):
    DISJOINT = 0
    SHARED_ENDPOINT = 1
    CROSSING = 2

    @property
    def intersects(self) -> bool:
        return self is not Relation.DISJOINT


def check_range(p: Sequence[int]) -> None:
    if abs(p[0]) > COORD_BOUND or abs(p[1]) > COORD_BOUND:
        raise InputOutOfRange(f"coordinate of {tuple(p)} exceeds {COORD_BOUND}")


def _sign(v: Number) -> int:
    return (v > 0) - (v < 0)


def cross(p, q, r) -> Number:
    """Twice the signed area of triangle ``(p, q, r)``; works for ints and Fractions."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orient(p: Point, q: Point, r: Point) -> int:
    """Orientation of the triangle ``(p, q, r)``.

    Returns +1 for counterclockwise, -1 for clockwise and 0 for collinear.
    Raises :class:`InputOutOfRange` if any coordinate is larger than
    :data:`COORD_BOUND` in magnitude.
    """
    for pt in (p, q, r):
        check_range(pt)
    return _sign(cross(p, q, r))


def segments_intersect(s: Segment, t: Segment) -> Relation:
    """Classify two segments over a point set in general position.

    ``CROSSING`` means the relative interiors meet, ``SHARED_ENDPOINT`` that
    exactly one endpoint is common. Collinear overlap is a general position
    violation, never a silent answer.
    """
    a, b = s
    c, d = t
    if a == b or c == d:
        raise GeneralPositionViolated("degenerate segment")
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        raise GeneralPositionViolated("identical segments")
    if shared:
        (v,) = shared
        u = b if a == v else a
        w = d if c == v else c
        if orient(v, u, w) == 0:
            raise GeneralPositionViolated(f"collinear edges through {v}")
        return Relation.SHARED_ENDPOINT
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if 0 in (o1, o2, o3, o4):
        raise GeneralPositionViolated("collinear segment endpoints")
    if o1 != o2 and o3 != o4:
        return Relation.CROSSING
    return Relation.DISJOINT


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the strict convex hull, counterclockwise (monotone chain)."""
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    if len(order) <= 2:
        return order

    def half(seq: Iterable[int]) -> list[int]:
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and cross(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class PointSet:
    """Points in general position, labelled ``1..n`` by their list order."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(Point(int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            check_range(p)
        if len(set(pts)) != len(pts):
            raise GeneralPositionViolated("repeated point")
        if not general_position(pts):
            raise GeneralPositionViolated("three collinear points")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[int]]) -> "PointSet":
        return cls(tuple(Point(*c) for c in coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, label: int) -> Point:
        """Point with 1-based ``label``."""
        if not 1 <= label <= len(self.points):
            raise IndexError(label)
        return self.points[label - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(-1, 2)

    def to_json(self) -> dict:
        return {"points": [[p.x, p.y] for p in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        return cls.from_coords(data["points"])


def orientation_table(coords: np.ndarray, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Signs of ``cross(coords[first[e]], coords[second[e]], coords[k])`` for all ``e, k``."""
    a = coords[first]
    b = coords[second]
    dx = (b[:, 0] - a[:, 0])[:, None]
    dy = (b[:, 1] - a[:, 1])[:, None]
    px = coords[None, :, 0] - a[:, 0][:, None]
    py = coords[None, :, 1] - a[:, 1][:, None]
    return np.sign(dx * py - dy * px).astype(np.int8)


def general_position(points: Sequence[Point]) -> bool:
    """True iff no three of ``points`` are collinear."""
    n = len(points)
    if n < 3:
        return True
    coords = np.array(points, dtype=np.int64)
    first, second = np.triu_indices(n, k=1)
    table = orientation_table(coords, first, second)
    # each row has exactly two zeros (the pair itself) when nothing else is on the line
    return bool(np.all(np.count_nonzero(table == 0, axis=1) == 2))


def is_convex_position(S: PointSet) -> bool:
    """True iff every point of ``S`` is a vertex of its convex hull."""
    return len(convex_hull(S.points)) == len(S)


def clockwise_labels(S: PointSet) -> list[int]:
    """Labels of a convex point set in clockwise order, starting at label 1."""
    if not is_convex_position(S):
        raise GeneralPositionViolated("point set is not in convex position")
    ccw = [i + 1 for i in convex_hull(S.points)]
    cw = ccw[::-1]
    start = cw.index(1)
    return cw[start:] + cw[:start]


def regular_polygon(n: int, radius: int = POLYGON_RADIUS) -> PointSet:
    """Integer-rounded regular ``n``-gon, labels ``1..n`` in clockwise order.

    The rotational offset is retried until rounding keeps the set in
    general and convex position with the intended clockwise labelling.
    """
    if n < 3:
        raise InvalidOrder(f"a polygon needs at least 3 vertices, got {n}")
    for attempt in range(1000):
        offset = math.pi / 2 + 0.0137 * attempt
        pts = tuple(
            Point(
                round(radius * math.cos(offset - 2 * math.pi * k / n)),
                round(radius * math.sin(offset - 2 * math.pi * k / n)),
            )
            for k in range(n)
        )
        try:
            S = PointSet(pts)
        except GeneralPositionViolated:
            continue
        if is_convex_position(S) and clockwise_labels(S) == list(range(1, n + 1)):
            return S
    raise GeneralPositionViolated(f"no valid rounding of the regular {n}-gon at radius {radius}")


def random_point_set(n: int, rng: np.random.Generator, box: int = 10**4) -> PointSet:
    """Rejection-sample ``n`` integer points in general position inside ``[-box, box]^2``."""
    if n < 3:
        raise InvalidOrder(f"need at least 3 points, got {n}")
    pts: list[Point] = []
    while len(pts) < n:
        x, y = (int(v) for v in rng.integers(-box, box + 1, size=2))
        cand = Point(x, y)
        if cand in pts:
            continue
        if any(cross(pts[i], pts[j], cand) == 0 for i in range(len(pts)) for j in range(i)):
            continue
        pts.append(cand)
    return PointSet(tuple(pts))


# ---------------------------------------------------------------------------
# lines and polygons, allowing rational points


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c`` with integer coefficients."""

    a: int
    b: int
    c: int

    @classmethod
    def through(cls, p, direction) -> "Line":
        """Line through the (possibly rational) point ``p`` with the given direction."""
        dx, dy = direction
        a, b = -dy, dx
        c = a * p[0] + b * p[1]
        coeffs = [Fraction(v) for v in (a, b, c)]
        scale = math.lcm(*(v.denominator for v in coeffs))
        ints = [int(v * scale) for v in coeffs]
        g = math.gcd(*ints) or 1
        return cls(*(v // g for v in ints))

    def side(self, p) -> int:
        return _sign(self.a * p[0] + self.b * p[1] - self.c)

    def as_triple(self) -> list[int]:
        return [self.a, self.b, self.c]


def line_intersection(l1: Line, l2: Line) -> tuple[Fraction, Fraction] | None:
    det = l1.a * l2.b - l1.b * l2.a
    if det == 0:
        return None
    x = Fraction(l1.c * l2.b - l1.b * l2.c, det)
    y = Fraction(l1.a * l2.c - l1.c * l2.a, det)
    return x, y


def strictly_inside(p, polygon: Sequence) -> bool:
    """True iff ``p`` lies in the open interior of the simple polygon.

    Exact winding-number test; points on the boundary count as outside.
    """
    k = len(polygon)
    winding = 0
    for idx in range(k):
        a = polygon[idx]
        b = polygon[(idx + 1) % k]
        s = cross(a, b, p)
        if s == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
            return False
        if a[1] <= p[1] < b[1] and s > 0:
            winding += 1
        elif b[1] <= p[1] < a[1] and s < 0:
            winding -= 1
    return winding != 0
