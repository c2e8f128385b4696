from __future__ import annotations

from functools import lru_cache

import numpy as np
import pytest

from geocolor.geometry import PointSet, random_point_set, regular_polygon
from geocolor.graph import GeometricGraph, complete_geometric


@lru_cache(maxsize=None)
def convex_graph(n: int) -> GeometricGraph:
    return complete_geometric(regular_polygon(n))


@lru_cache(maxsize=None)
def random_graph(n: int, seed: int) -> GeometricGraph:
    return complete_geometric(random_point_set(n, np.random.default_rng(seed)))


@pytest.fixture
def k4() -> GeometricGraph:
    return convex_graph(4)


@pytest.fixture
def k5() -> GeometricGraph:
    return convex_graph(5)


@pytest.fixture
def square_with_center() -> PointSet:
    return PointSet.from_coords([(0, 0), (10, 0), (10, 10), (0, 10), (5, 4)])


# acceptance criteria report their verdicts here; printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
