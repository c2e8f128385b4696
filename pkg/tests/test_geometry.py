import itertools
import math

import pytest
from hypothesis import given, strategies as st

from geocolor.errors import GeneralPositionViolated, InputOutOfRange, InvalidOrder
from geocolor.geometry import (
    COORD_BOUND,
    Line,
    Point,
    PointSet,
    Relation,
    Segment,
    clockwise_labels,
    cross,
    general_position,
    is_convex_position,
    line_intersection,
    orient,
    regular_polygon,
    segments_intersect,
    strictly_inside,
)

coord = st.integers(-COORD_BOUND, COORD_BOUND)
points = st.builds(Point, coord, coord)


def test_orient_examples():
    assert orient(Point(0, 0), Point(1, 0), Point(0, 1)) == 1
    assert orient(Point(0, 0), Point(1, 1), Point(2, 2)) == 0
    assert orient(Point(0, 0), Point(0, 1), Point(1, 0)) == -1


def test_orient_range():
    with pytest.raises(InputOutOfRange):
        orient(Point(0, 0), Point(COORD_BOUND + 1, 0), Point(0, 1))
    assert orient(Point(-COORD_BOUND, -COORD_BOUND), Point(COORD_BOUND, -COORD_BOUND), Point(COORD_BOUND, COORD_BOUND)) == 1


@given(points, points, points)
def test_orient_antisymmetric(p, q, r):
    s = orient(p, q, r)
    assert orient(q, p, r) == -s
    assert orient(p, r, q) == -s
    assert orient(r, q, p) == -s
    assert orient(q, r, p) == s


@pytest.mark.parametrize(
    "s, t, expected",
    [
        (((0, 0), (2, 2)), ((0, 2), (2, 0)), Relation.CROSSING),
        (((0, 0), (1, 0)), ((1, 0), (2, 1)), Relation.SHARED_ENDPOINT),
        (((0, 0), (1, 0)), ((0, 2), (1, 2)), Relation.DISJOINT),
    ],
)
def test_segments_intersect_examples(s, t, expected):
    s = Segment(Point(*s[0]), Point(*s[1]))
    t = Segment(Point(*t[0]), Point(*t[1]))
    assert segments_intersect(s, t) is expected
    assert segments_intersect(t, s) is expected


def test_collinear_overlap_rejected():
    with pytest.raises(GeneralPositionViolated):
        segments_intersect(Segment(Point(0, 0), Point(2, 0)), Segment(Point(1, 0), Point(3, 0)))
    with pytest.raises(GeneralPositionViolated):
        segments_intersect(Segment(Point(0, 0), Point(1, 0)), Segment(Point(1, 0), Point(2, 0)))


small = st.integers(-50, 50)


@given(st.lists(st.tuples(small, small), min_size=4, max_size=4, unique=True))
def test_segments_intersect_symmetric(pts):
    a, b, c, d = (Point(*p) for p in pts)
    if not general_position([a, b, c, d]):
        return
    assert segments_intersect(Segment(a, b), Segment(c, d)) is segments_intersect(Segment(d, c), Segment(b, a))


@given(st.lists(st.tuples(small, small), min_size=4, max_size=4, unique=True))
def test_one_crossing_matching_per_convex_quadruple(pts):
    pts = [Point(*p) for p in pts]
    if not general_position(pts):
        return
    S = PointSet(tuple(pts))
    a, b, c, d = pts
    matchings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
    crossings = sum(segments_intersect(Segment(*s), Segment(*t)) is Relation.CROSSING for s, t in matchings)
    assert crossings == (1 if is_convex_position(S) else 0)


def test_convex_position_examples(square_with_center):
    pentagon = PointSet.from_coords([(0, 100), (95, 31), (59, -81), (-59, -81), (-95, 31)])
    assert is_convex_position(pentagon)
    assert not is_convex_position(square_with_center)
    assert is_convex_position(PointSet.from_coords([(0, 0), (5, 1), (2, 7)]))


def test_point_set_validation():
    with pytest.raises(GeneralPositionViolated):
        PointSet.from_coords([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(GeneralPositionViolated):
        PointSet.from_coords([(0, 0), (0, 0), (2, 3)])
    with pytest.raises(InputOutOfRange):
        PointSet.from_coords([(0, 0), (COORD_BOUND * 2, 1), (2, 3)])


def test_general_position_matches_brute_force():
    pts = [Point(x, y) for x, y in [(0, 0), (3, 1), (6, 2), (1, 5), (4, 4)]]
    brute = all(cross(p, q, r) != 0 for p, q, r in itertools.combinations(pts, 3))
    assert general_position(pts) is brute is False
    pts[2] = Point(6, 3)
    brute = all(cross(p, q, r) != 0 for p, q, r in itertools.combinations(pts, 3))
    assert general_position(pts) is brute is True


@pytest.mark.parametrize("n", [3, 4, 5, 13, 50, 100])
def test_regular_polygon(n):
    S = regular_polygon(n)
    assert len(S) == n
    assert is_convex_position(S)
    assert general_position(S.points)
    assert clockwise_labels(S) == list(range(1, n + 1))
    # clockwise: consecutive triples turn right
    assert all(orient(S[i], S[i % n + 1], S[(i + 1) % n + 1]) == -1 for i in range(1, n + 1))


def test_regular_polygon_too_small():
    with pytest.raises(InvalidOrder):
        regular_polygon(2)


def test_lines_and_inside():
    l1 = Line.through((0, 0), (1, 1))
    l2 = Line.through((0, 4), (1, -1))
    assert line_intersection(l1, l2) == (2, 2)
    assert line_intersection(l1, Line.through((0, 1), (2, 2))) is None
    assert l1.side((0, 1)) == -l1.side((1, 0)) != 0
    quad = [(0, 0), (10, 0), (10, 10), (0, 10)]
    assert strictly_inside((5, 5), quad)
    assert not strictly_inside((10, 5), quad)
    assert not strictly_inside((11, 5), quad)
    # non-convex (dart) quadrilateral
    dart = [(0, 0), (10, 5), (0, 10), (3, 5)]
    assert strictly_inside((5, 5), dart)
    assert not strictly_inside((1, 5), dart)


def test_line_through_rational_point():
    from fractions import Fraction

    p = (Fraction(1, 3), Fraction(2, 7))
    line = Line.through(p, (3, 5))
    assert line.a * p[0] + line.b * p[1] == line.c
    assert math.gcd(line.a, line.b, line.c) == 1
