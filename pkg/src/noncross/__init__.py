"""Non-crossing structures of planar integer point sets.

Enumerates, counts, constructs and estimates the four structure classes of
a finite planar point set with exact integer coordinates: non-crossing
paths, non-crossing Hamiltonian paths, surrounding polygons and
polygonalizations.  All geometric decisions are exact; enumeration output
is deterministic; brute-force oracles certify every enumerator.
"""

from .geom import (
    HullInfo,
    InternalInvariantError,
    Orientation,
    Placement,
    Point,
    PointSet,
    SegmentRelation,
    convex_hull,
    hull_classify,
    orient,
    point_vs_polygon,
    polygon_is_simple,
    radial_order,
    segment_relation,
)
from .params import MaxCollinear, ParamReport, inhull, max_collinear, offline, param_report
from .paths import (
    EnumerationOutcome,
    PathSeq,
    enumerate_ham_paths,
    enumerate_paths,
    is_noncrossing_path,
    path_children,
)
from .polygons import (
    PolygonSeq,
    canonical_cycle,
    canonical_parent,
    enumerate_polygonalizations,
    enumerate_surrounding,
    hull_cycle,
    is_surrounding_polygon,
    polygon_children,
)
from .construct import (
    Signature,
    enumerate_vv_paths,
    ham_path_between,
    realize_signature,
    steinhaus_complete,
    visible_vertices,
)
from .counting import (
    CountReport,
    EstimateReport,
    convex_ham_count,
    convex_path_count,
    count_010_avoiding,
    estimate,
    log_binom,
    proven_ham_lower,
    pseudotriangle_poly_count,
    pseudotriangle_surround_count,
    surround_series,
)
from .oracle import (
    CrossCheckReport,
    brute_ham,
    brute_paths,
    brute_poly,
    brute_surround,
    cross_check,
    dp_010_avoiding,
)
from .families import (
    FamilySpec,
    gen_collinear,
    gen_convex,
    gen_grid,
    gen_one_sided,
    gen_pseudotriangle,
    gen_random,
)

__version__ = "0.1.0"
