"""Exact-arithmetic toolkit for log del Pezzo surfaces."""

__version__ = "0.1.0"

from .graphs import (
    DualGraph,
    NotContractibleError,
    NotLogTerminalError,
    QuotientType,
    SingClass,
    audit_attachment_pairing,
    audit_small_codiscrepancy_bound,
    classify,
    codiscrepancies,
    different_degree,
    enumerate_log_terminal,
    hj_expand,
    k2_contribution,
)
from .linalg import is_negative_definite, solve_linear
from .poly import Poly, has_common_affine_zero, real_root_count, resultant
from .surfaces import (
    SurfaceModel,
    SingularModel,
    base_surface,
    blowup_orbit,
    contract,
    invariants_report,
    is_del_pezzo,
    negative_curves,
    track,
)

__all__ = [
    "DualGraph",
    "NotContractibleError",
    "NotLogTerminalError",
    "Poly",
    "QuotientType",
    "SingClass",
    "SingularModel",
    "SurfaceModel",
    "audit_attachment_pairing",
    "audit_small_codiscrepancy_bound",
    "base_surface",
    "blowup_orbit",
    "classify",
    "codiscrepancies",
    "contract",
    "different_degree",
    "enumerate_log_terminal",
    "has_common_affine_zero",
    "hj_expand",
    "invariants_report",
    "is_del_pezzo",
    "is_negative_definite",
    "k2_contribution",
    "negative_curves",
    "real_root_count",
    "resultant",
    "solve_linear",
    "track",
]
