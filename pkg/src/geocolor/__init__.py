"""Complete edge colorings of complete geometric graphs."""

__version__ = "0.1.0"

from .bounds import (
    BoundsReport,
    asymptotic_report,
    bounds_report,
    count_crossings,
    incidence_count,
    psi_upper_convex,
    psi_upper_from_crossings,
)
from .convex import (
    CirculantClass,
    ConstructionTrace,
    HalvingPair,
    circulant_partition,
    color_convex,
    color_k4,
    is_almost_halving_edge,
    is_halving_edge,
    max_thrackle_check,
)
from .general import (
    LineConfiguration,
    PendantQuad,
    build_configuration,
    color_general,
    enumerate_families,
    six_partition,
)
from .geometry import (
    Point,
    PointSet,
    Relation,
    Segment,
    is_convex_position,
    orient,
    random_point_set,
    regular_polygon,
    segments_intersect,
)
from .graph import (
    Coloring,
    EdgeId,
    GeometricGraph,
    VerificationReport,
    build_intersection_relation,
    complete_geometric,
    singleton_bound_holds,
    verify,
)
from .oracle import alpha_exact, psi_exact
