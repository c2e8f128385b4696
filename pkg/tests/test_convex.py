import itertools

import numpy as np
import pytest

from geocolor.convex import (
    CirculantClass,
    circulant_partition,
    color_convex,
    color_count,
    convex_relation,
    cyc_edge,
    is_almost_halving_edge,
    is_halving_edge,
    is_halving_edge_geometric,
    max_thrackle_check,
    residue,
    wrap,
)
from geocolor.errors import EvenOrderRequired, InvalidOrder, NotConvex, UseK4Variant
from geocolor.geometry import PointSet, regular_polygon
from geocolor.graph import EdgeId, complete_geometric, verify

from conftest import convex_graph


def arc_counts(n, e):
    """Labels strictly between the endpoints on each arc, by walking the circle."""
    one = sum(1 for v in range(e.i + 1, e.j))
    return one, n - 2 - one


def test_wrap():
    assert [wrap(v, 5) for v in (-1, 0, 1, 5, 6, 11)] == [4, 5, 1, 5, 1, 1]
    assert cyc_edge(7, 6, 9) == EdgeId(2, 6)


@pytest.mark.parametrize(
    "n, e, expected",
    [(13, EdgeId(1, 7), True), (13, EdgeId(1, 2), False), (14, EdgeId(1, 8), True)],
)
def test_halving_examples(n, e, expected):
    assert is_halving_edge(n, e) is expected
    a, b = arc_counts(n, e)
    assert (min(a, b) >= (n - 2) // 2) is expected


@pytest.mark.parametrize("n", range(3, 31))
def test_halving_arithmetic_matches_geometry(n):
    S = regular_polygon(n)
    for i, j in itertools.combinations(range(1, n + 1), 2):
        e = EdgeId(i, j)
        assert is_halving_edge(n, e) is is_halving_edge_geometric(S, e)


def test_almost_halving_examples():
    assert is_almost_halving_edge(14, EdgeId(1, 7))
    assert not is_almost_halving_edge(14, EdgeId(1, 8))
    with pytest.raises(EvenOrderRequired):
        is_almost_halving_edge(13, EdgeId(1, 5))


@pytest.mark.parametrize("n", range(4, 31, 2))
def test_almost_halving_is_residue_below_half(n):
    for i, j in itertools.combinations(range(1, n + 1), 2):
        assert is_almost_halving_edge(n, EdgeId(i, j)) is (residue(n, EdgeId(i, j)) == n // 2 - 1)


@pytest.mark.parametrize(
    "n, Js, total",
    [
        (13, [(6,), (5,), (1, 4), (2, 3)], 78),
        (14, [(7,), (6,), (1, 5), (2, 4), (3,)], 91),
        (5, [(2,), (1,)], 10),
    ],
)
def test_circulant_partition_examples(n, Js, total):
    parts = circulant_partition(n)
    assert [p.J for p in parts] == Js
    edges = [e for p in parts for e in p.edges]
    assert len(edges) == len(set(edges)) == total == n * (n - 1) // 2


@pytest.mark.parametrize("n", range(3, 41))
def test_circulant_partition_exact(n):
    parts = circulant_partition(n)
    seen = {}
    for p in parts:
        for e in p.edges:
            assert e not in seen
            seen[e] = p.J
            # brute membership: label difference mod n is +-k for some k in J
            assert any((e.j - e.i) % n in (k, n - k) for k in p.J)
        for k in p.J:
            size = sum(1 for e in p.edges if (e.j - e.i) % n in (k, n - k))
            assert size == (n // 2 if 2 * k == n else n)
    assert len(seen) == n * (n - 1) // 2


def test_circulant_class_half_residue():
    assert len(CirculantClass(14, (7,)).edges) == 7
    assert len(CirculantClass(13, (6,)).edges) == 13


@pytest.mark.parametrize(
    "n, k, case",
    [(5, 7, "small"), (13, 45, "odd-b"), (16, 68, "even-b"), (14, 52, "even-a"), (15, 60, "odd-a"), (3, 3, "small")],
)
def test_color_convex_examples(n, k, case):
    coloring, trace = color_convex(n)
    r = verify(coloring)
    assert r.is_proper and r.is_complete
    assert r.k == k == color_count(n) == trace.N3
    assert trace.case == case


def test_color_convex_errors():
    with pytest.raises(UseK4Variant):
        color_convex(4)
    with pytest.raises(InvalidOrder):
        color_convex(2)
    square_with_center = PointSet.from_coords([(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)])
    with pytest.raises(NotConvex):
        color_convex(5, square_with_center)


@pytest.mark.parametrize("n", [6, 7, 8, 9, 12, 13, 17, 26])
def test_trace_structure(n):
    coloring, trace = color_convex(n)
    assert trace.case == {3: "odd-a", 1: "odd-b", 2: "even-a", 0: "even-b"}[n % 4]
    h = n // 2
    assert trace.N1 == n * ((h - 1) // 2 - 1)
    assert trace.N2 == trace.N1 + n
    assert [c.color for c in trace.classes] == list(range(1, color_count(n) + 1))
    for c in trace.classes:
        assert coloring.color_of[c.edges[0]] == c.color
        assert len(c.edges) <= 3
        if len(c.edges) == 3:
            assert c.kind == "repair"
        # the leftover edge joins a singleton halving class, so repairs have two edges
        assert (len(c.edges) == 1) is (c.kind in ("halving", "almost"))
        if c.kind == "halving":
            assert len(c.edges) == 1 and is_halving_edge(n, c.edges[0])
        elif c.kind == "almost":
            assert is_almost_halving_edge(n, c.edges[0])
        elif c.kind == "pair":
            first, second = c.edges
            assert convex_relation(n, first, second).name == "DISJOINT"
            assert is_halving_edge(n, c.witness)
        else:
            assert is_halving_edge(n, c.witness) and c.witness in c.edges
    n_repairs = 1 if trace.case in ("odd-b", "even-a") else 0
    assert len(trace.repairs) == n_repairs
    assert verify(coloring).singleton_classes <= n


def test_repairs_follow_the_construction():
    _, t = color_convex(13)
    assert t.repairs == [(EdgeId(5, 13), t.N1 + 6)]
    assert t.classes[t.N1 + 6 - 1].edges == [EdgeId(6, 12), EdgeId(5, 13)]
    _, t = color_convex(14)
    assert t.repairs == [(EdgeId(11, 14), t.N1 + 1)]
    assert t.classes[t.N1].edges == [EdgeId(1, 8), EdgeId(11, 14)]


@pytest.mark.parametrize("n", range(6, 31, 2))
def test_even_halves_match_printed_ranges(n):
    h = n // 2
    first_half = {cyc_edge(n, j, j + h - 1) for j in range(1, h + 1)}
    assert EdgeId(1, h) in first_half and EdgeId(h, n - 1) in first_half
    second_half = set(CirculantClass(n, (h - 1,)).edges) - first_half
    assert second_half == {cyc_edge(n, j, j + h - 1) for j in range(h + 1, n + 1)}
    assert EdgeId(h + 1, n) in second_half and cyc_edge(n, n, h - 1) in second_half
    G = convex_graph(n)
    assert max_thrackle_check(G, first_half)
    assert max_thrackle_check(G, second_half)
    assert max_thrackle_check(G, set(CirculantClass(n, (h,)).edges) | first_half)


def test_max_thrackle_examples():
    G13 = convex_graph(13)
    c13 = CirculantClass(13, (6,)).edges
    assert len(c13) == 13 and max_thrackle_check(G13, c13)
    G14 = convex_graph(14)
    c14 = CirculantClass(14, (7,)).edges + [cyc_edge(14, j, j + 6) for j in range(1, 8)]
    assert len(set(c14)) == 14 and max_thrackle_check(G14, c14)
    assert not max_thrackle_check(convex_graph(6), [EdgeId(1, 2), EdgeId(3, 4)])


@pytest.mark.parametrize("n", range(4, 25))
def test_convex_relation_matches_geometry(n):
    G = convex_graph(n)
    for e, f in itertools.combinations(G.edges, 2):
        assert convex_relation(n, e, f) is G.relation.relation(e, f)


def all_halving_pairs(n):
    """Every (e_{i,j}, e_{j+1,k}) that is disjoint and has a halving witness, straight from the definition."""
    out = []
    for i, j, k in itertools.product(range(1, n + 1), repeat=3):
        if len({i, j, wrap(j + 1, n), k}) < 4:
            continue
        first, second = cyc_edge(n, i, j), cyc_edge(n, j + 1, k)
        if convex_relation(n, first, second).name != "DISJOINT":
            continue
        if any(is_halving_edge(n, w) for w in (cyc_edge(n, i, j + 1), cyc_edge(n, i, k), cyc_edge(n, j, k))):
            out.append((first, second))
    return out


@pytest.mark.parametrize("n", range(5, 13))
def test_halving_intersections_over_all_pairs_by_definition(n):
    G = convex_graph(n)
    # an edge meets itself, so the diagonal counts as intersecting here
    inter = G.relation.intersects | np.eye(len(G.edges), dtype=bool)
    idx = G.index
    halving = [idx[e] for e in G.edges if is_halving_edge(n, e)]
    pairs = [(idx[a], idx[b]) for a, b in all_halving_pairs(n)]
    assert pairs
    for a, b in itertools.combinations(halving, 2):
        assert inter[a, b]
    for h in halving:
        for a, b in pairs:
            assert inter[h, a] or inter[h, b]
    P = np.array(pairs)
    for a, b in pairs:
        hit = inter[a, P[:, 0]] | inter[a, P[:, 1]] | inter[b, P[:, 0]] | inter[b, P[:, 1]]
        assert np.all(hit)
    if n % 2 == 0:
        almost = [idx[e] for e in G.edges if is_almost_halving_edge(n, e)]
        for f in almost:
            assert all(inter[f, h] for h in halving)
            assert all(inter[f, a] or inter[f, b] for a, b in pairs)


def test_construction_on_relabelled_convex_set():
    S = regular_polygon(11)
    perm = [4, 9, 1, 11, 2, 7, 3, 10, 5, 8, 6]
    T = PointSet(tuple(S[p] for p in perm))
    coloring, trace = color_convex(11, T)
    r = verify(coloring)
    assert r.is_proper and r.is_complete and r.k == 33
