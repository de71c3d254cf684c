"""Separating systems and metric convexity: Hamming, Euclidean, L1 and
generic finite metric spaces, plus constructions and exact search for
maximal binary (2,1)-separating codes."""

from .errors import GuardExceeded, ParseError, SearchTimeout, SepsysError
from .hamming import (
    HammingSpace,
    HalfSpace,
    ProjectionHull,
    hahn_banach_witness,
    hull_p1,
    hull_p2,
    hull_p3,
    saturation_depth,
    segment,
)
from .metric import (
    FiniteMetricSpace,
    from_edges,
    hull_fixpoint,
    is_convex,
    k32_space,
    segment_generic,
)
from .separation import (
    Code,
    SeparationReport,
    check_21_fast,
    min_separating_count,
    separating_coordinates,
    set_system_check,
)

__all__ = [
    "Code",
    "FiniteMetricSpace",
    "GuardExceeded",
    "HalfSpace",
    "HammingSpace",
    "ParseError",
    "ProjectionHull",
    "SearchTimeout",
    "SeparationReport",
    "SepsysError",
    "check_21_fast",
    "from_edges",
    "hahn_banach_witness",
    "hull_fixpoint",
    "hull_p1",
    "hull_p2",
    "hull_p3",
    "is_convex",
    "k32_space",
    "min_separating_count",
    "saturation_depth",
    "segment",
    "segment_generic",
    "separating_coordinates",
    "set_system_check",
]
