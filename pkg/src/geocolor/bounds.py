"""Upper and lower bounds on the number of colors of a complete coloring."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .geometry import Relation
from .graph import GeometricGraph

# best known rectilinear crossing constant: cr(K_n) <= c * C(n, 4) + O(n^3)
C_RECT = 0.380488
COEF_UPPER = 0.1781
COEF_LOWER = 0.0710


def count_crossings(G: GeometricGraph) -> int:
    """Number of unordered edge pairs that cross at an interior point."""
    return G.relation.count(Relation.CROSSING)


def incidence_count(G: GeometricGraph) -> int:
    """Edge pairs meeting at a vertex: the sum over vertices of C(deg, 2)."""
    return sum(d * (d - 1) // 2 for d in G.degrees())


def psi_upper_from_counts(incidences: int, crossings: int) -> int:
    """Largest ``k`` with ``C(k, 2) <= incidences + crossings``, in exact integers."""
    return (1 + math.isqrt(1 + 8 * (incidences + crossings))) // 2


def psi_upper_from_crossings(G: GeometricGraph) -> int:
    """Any complete coloring needs one intersecting pair per color pair."""
    return psi_upper_from_counts(incidence_count(G), count_crossings(G))


def psi_upper_convex(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (n * n + n) // 4


def general_lower_count(n: int) -> int:
    """Number of colors produced by the general-position construction: 12 m^2 for n = 13m + 6 + r."""
    if n <= 18:
        raise ValueError(f"the construction needs n > 18, got {n}")
    m = (n - 6) // 13
    return 12 * m * m


@dataclass
class BoundsReport:
    n: int
    m_incidences: int
    cr_drawing: int
    psi_upper_convex: int
    psi_upper_crossing: int
    psi_g_lower_construction: int | None
    c_rect: float = C_RECT
    coef_upper: float = COEF_UPPER
    coef_lower: float = COEF_LOWER
    coef_upper_computed: float = math.sqrt(C_RECT / 12)
    coef_lower_computed: float = 12 / 169

    def to_json(self) -> dict:
        return asdict(self)


def bounds_report(G: GeometricGraph) -> BoundsReport:
    """All bounds for a concrete drawing."""
    n = G.n
    m = incidence_count(G)
    cr = count_crossings(G)
    return BoundsReport(
        n=n,
        m_incidences=m,
        cr_drawing=cr,
        psi_upper_convex=psi_upper_convex(n),
        psi_upper_crossing=psi_upper_from_counts(m, cr),
        psi_g_lower_construction=general_lower_count(n) if n > 18 else None,
    )


def asymptotic_report(n: int, G: GeometricGraph | None = None) -> BoundsReport:
    """Report for order ``n`` with the asymptotic coefficients checked.

    Without a drawing, the crossing count is that of the convex drawing,
    C(n, 4).  The floating point coefficients are informational only.
    """
    if n <= 18:
        raise ValueError(f"asymptotic report needs n > 18, got {n}")
    upper = math.sqrt(C_RECT / 12)
    lower = 12 / 169
    assert upper <= COEF_UPPER, upper
    assert lower >= COEF_LOWER, lower
    if G is not None:
        return bounds_report(G)
    m = n * math.comb(n - 1, 2)
    cr = math.comb(n, 4)
    return BoundsReport(
        n=n,
        m_incidences=m,
        cr_drawing=cr,
        psi_upper_convex=psi_upper_convex(n),
        psi_upper_crossing=psi_upper_from_counts(m, cr),
        psi_g_lower_construction=general_lower_count(n),
    )
