"""Center/edge variable transforms on periodically staggered 1-D grids,
applied axis-wise to N-dimensional fields, with exact solvability
classification and an independent dense-arithmetic oracle.
"""

from .errors import (
    FieldFormatError,
    InconsistentDataError,
    ParityError,
    StagGridError,
)
from .exact import (
    MAX_ORACLE_UNKNOWNS,
    DenseSystem,
    EchelonResult,
    build_system,
    determinant_exact,
    row_echelon,
    solve_dense,
)
from .grid import (
    DEFAULT_TOLERANCE,
    CenterField1D,
    EdgeField1D,
    Family,
    Inconsistent,
    PeriodicStagger1D,
    SolvabilityReport,
    SolveOutcome,
    Unique,
    alternating_residual,
    centers_from_edges,
    complete_min_norm,
    complete_pinned,
    edges_from_centers,
    solvability_report,
)
from .ndfield import FieldND, TransformSummary, to_centers_along, to_edges_along
from .fieldio import read_field, write_field
from .audit import AuditRecord, AuditReport, build_audit_report, render_json, render_text

__version__ = "0.1.0"

__all__ = [
    "AuditRecord",
    "AuditReport",
    "CenterField1D",
    "DEFAULT_TOLERANCE",
    "DenseSystem",
    "EchelonResult",
    "EdgeField1D",
    "Family",
    "FieldFormatError",
    "FieldND",
    "Inconsistent",
    "InconsistentDataError",
    "MAX_ORACLE_UNKNOWNS",
    "ParityError",
    "PeriodicStagger1D",
    "SolvabilityReport",
    "SolveOutcome",
    "StagGridError",
    "TransformSummary",
    "Unique",
    "alternating_residual",
    "build_audit_report",
    "build_system",
    "centers_from_edges",
    "complete_min_norm",
    "complete_pinned",
    "determinant_exact",
    "edges_from_centers",
    "read_field",
    "render_json",
    "render_text",
    "row_echelon",
    "solvability_report",
    "solve_dense",
    "to_centers_along",
    "to_edges_along",
    "write_field",
    "__version__",
]
