"""Numerical range, numerical radius, and reverse radius-norm bound checks.

The library computes the numerical range boundary, the numerical radius, and
the operator norm of dense complex matrices, evaluates a family of reverse
bounds on the norm-radius gap under disk and sector certificates, and runs
randomized ensemble sweeps and extremal searches around them.
"""

from .bounds import (
    ACCRETIVE,
    INEQUALITY_IDS,
    OPERATOR_ORDER,
    SLACK_TOL,
    DegenerateSector,
    DiskCertificate,
    InequalityReport,
    InvalidInterval,
    InvalidRho,
    InvalidSector,
    SectorPair,
    ZeroOperator,
    check_disk,
    check_sector_hypothesis,
    eval_disk_bound,
    eval_disk_gap_squared,
    eval_disk_gap_weighted,
    eval_radius_ratio,
    eval_sector_gap,
    eval_sector_gap_weighted,
    eval_sector_ratio,
    eval_segment_bounds,
    optimize_lambda,
    sector_to_disk,
    verify_all,
)
from .extremal import (
    SearchResult,
    candidate_violations,
    gen_disk_instance,
    gen_nilpotent_instance,
    gen_segment_instance,
    ginibre,
    orthogonal_ranges_check,
    probe_equality_case,
    random_unitary,
    search_sqrt_disk,
    shift2,
)
from .linalg import (
    DimensionMismatch,
    HermitianEigen,
    NoConvergence,
    NotHermitian,
    add,
    adjoint,
    as_matrix,
    hermitian_eigen,
    identity,
    matmul,
    operator_norm,
    scale,
    shift,
)
from .numrange import (
    Boundary,
    RangeSummary,
    is_convex_polyline,
    numerical_radius,
    numerical_radius_oracle,
    numerical_range_boundary,
    polygon_cross_products,
    range_summary,
    rotated_hermitian_part,
    support_values,
)

__version__ = "0.1.0"

__all__ = [
    "ACCRETIVE",
    "INEQUALITY_IDS",
    "OPERATOR_ORDER",
    "SLACK_TOL",
    "Boundary",
    "DegenerateSector",
    "DimensionMismatch",
    "DiskCertificate",
    "HermitianEigen",
    "InequalityReport",
    "InvalidInterval",
    "InvalidRho",
    "InvalidSector",
    "NoConvergence",
    "NotHermitian",
    "RangeSummary",
    "SearchResult",
    "SectorPair",
    "ZeroOperator",
    "add",
    "adjoint",
    "as_matrix",
    "candidate_violations",
    "check_disk",
    "check_sector_hypothesis",
    "eval_disk_bound",
    "eval_disk_gap_squared",
    "eval_disk_gap_weighted",
    "eval_radius_ratio",
    "eval_sector_gap",
    "eval_sector_gap_weighted",
    "eval_sector_ratio",
    "eval_segment_bounds",
    "gen_disk_instance",
    "gen_nilpotent_instance",
    "gen_segment_instance",
    "ginibre",
    "hermitian_eigen",
    "identity",
    "is_convex_polyline",
    "matmul",
    "numerical_radius",
    "numerical_radius_oracle",
    "numerical_range_boundary",
    "operator_norm",
    "optimize_lambda",
    "orthogonal_ranges_check",
    "polygon_cross_products",
    "probe_equality_case",
    "random_unitary",
    "range_summary",
    "rotated_hermitian_part",
    "scale",
    "search_sqrt_disk",
    "sector_to_disk",
    "shift",
    "shift2",
    "support_values",
    "verify_all",
]
