"""Exact pseudoachromatic and achromatic indices of small geometric graphs.

Depth-first branch and bound over set partitions of the edges, encoded as
restricted growth strings (edge ``t`` joins an existing class or opens the
next one), with edge sets held as integer bitmasks.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .bounds import psi_upper_from_crossings
from .errors import TooLarge
from .geometry import is_convex_position
from .graph import Coloring, GeometricGraph, verify

log = logging.getLogger(__name__)

MAX_EDGES = 15


@dataclass
class SearchResult:
    k: int
    witness: Coloring
    nodes: int


class _Search:
    def __init__(self, G: GeometricGraph, proper: bool, best: int, best_classes: list[int] | None) -> None:
        self.G = G
        self.proper = proper
        self.E = len(G.edges)
        self.masks = G.relation.masks()
        self.ceiling = psi_upper_from_crossings(G)
        self.best = best
        self.best_classes = best_classes
        self.nodes = 0
        self.members: list[int] = []
        self.touch: list[int] = []  # union of intersect masks over each class

    def _feasible(self, pending: int) -> bool:
        k = len(self.members)
        pending_meet = any(self.masks[e] & pending for e in _bits(pending))
        for a in range(k):
            for b in range(a + 1, k):
                if self.touch[a] & self.members[b]:
                    continue
                if pending and ((self.touch[a] | self.touch[b]) & pending or pending_meet):
                    continue
                return False
        return True

    def _complete(self) -> bool:
        k = len(self.members)
        return all(self.touch[a] & self.members[b] for a in range(k) for b in range(a + 1, k))

    def run(self) -> None:
        self._dfs(0)

    def _dfs(self, t: int) -> bool:
        """Returns True once the ceiling is reached, which ends the whole search."""
        self.nodes += 1
        k = len(self.members)
        if t == self.E:
            if k > self.best and self._complete():
                self.best = k
                self.best_classes = list(self.members)
                log.debug("improved to %d after %d nodes", k, self.nodes)
                return k >= self.ceiling
            return False
        remaining = self.E - t
        if k + remaining <= self.best:
            return False
        pending = ((1 << self.E) - 1) ^ ((1 << t) - 1)
        if not self._feasible(pending):
            return False
        bit = 1 << t
        m = self.masks[t]
        # opening a new class first reaches large k early, which tightens pruning
        self.members.append(bit)
        self.touch.append(m)
        stop = self._dfs(t + 1)
        self.members.pop()
        self.touch.pop()
        if stop:
            return True
        for c in range(k):
            if self.proper and m & self.members[c]:
                continue
            self.members[c] |= bit
            old = self.touch[c]
            self.touch[c] |= m
            stop = self._dfs(t + 1)
            self.members[c] ^= bit
            self.touch[c] = old
            if stop:
                return True
        return False


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _warm_start(G: GeometricGraph, proper: bool) -> tuple[int, list[int] | None]:
    n = G.n
    if n < 3 or len(G.edges) != n * (n - 1) // 2 or not is_convex_position(G.points):
        return 0, None
    from .convex import color_convex, color_k4

    if n == 4:
        psi, alpha = color_k4(G.points)
        c = alpha if proper else psi
    else:
        c, _ = color_convex(n, G.points)
    classes = [0] * c.k
    for e, col in c.color_of.items():
        classes[col - 1] |= 1 << G.index[e]
    return c.k, classes


def _solve(G: GeometricGraph, proper: bool, warm_start: bool) -> SearchResult:
    if len(G.edges) > MAX_EDGES:
        raise TooLarge(f"exact search is limited to {MAX_EDGES} edges, got {len(G.edges)}")
    if not G.edges:
        raise TooLarge("exact search needs at least one edge")
    best, classes = _warm_start(G, proper) if warm_start else (0, None)
    search = _Search(G, proper, best, classes)
    search.run()
    witness = Coloring.from_classes(G, [[G.edges[b] for b in _bits(m)] for m in search.best_classes])
    report = verify(witness)
    assert report.is_complete and (report.is_proper or not proper), report
    return SearchResult(search.best, witness, search.nodes)


def psi_exact(G: GeometricGraph, warm_start: bool = True) -> int:
    """Maximum number of colors in a complete coloring of ``G``."""
    return _solve(G, proper=False, warm_start=warm_start).k


def alpha_exact(G: GeometricGraph, warm_start: bool = True) -> int:
    """Maximum number of colors in a proper complete coloring of ``G``."""
    return _solve(G, proper=True, warm_start=warm_start).k


def solve(G: GeometricGraph, mode: str, warm_start: bool = True) -> SearchResult:
    if mode not in ("psi", "alpha"):
        raise ValueError(f"mode must be 'psi' or 'alpha', got {mode!r}")
    return _solve(G, proper=(mode == "alpha"), warm_start=warm_start)
