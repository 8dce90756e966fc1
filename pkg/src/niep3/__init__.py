"""Exact-arithmetic realizability checks and constructions for spectra
with three nonzero eigenvalues (a Perron root and a conjugate pair).

The package decides necessary conditions, runs three constructive searches
for a nonnegative realizing matrix of minimal dimension, and certifies every
construction by recomputing the characteristic polynomial from the matrix.
"""

from .compare import ComparisonTable, MethodCaps, compare_methods
from .errors import (
    BackendMismatch,
    BadAngle,
    BadConstantTerm,
    BadDimension,
    BadModulus,
    DegreeTooSmall,
    DivisionByZeroPolynomial,
    InfeasibleCandidate,
    InfeasibleLayout,
    LadderMismatch,
    NiepError,
    NonRealRequired,
    NotApplicable,
    NotMonic,
    NotRealizable,
    NotSquare,
    ParseError,
    PerronViolated,
    SelfCheckFailed,
    UsageError,
    WrongBackend,
)
from .laffey import LaffeyCandidate, assemble_Xm, build_laffey_candidate, find_min_laffey
from .matrices import DenseMatrix, charpoly, companion
from .multiblock import (
    MultiBlockLayout,
    assemble_multiblock,
    build_multiblock_layout,
    compute_ftilde,
    division_ladder,
    find_min_multiblock,
    series_l_coefficients,
)
from .poly import (
    Polynomial,
    PowerSums,
    TruncatedSeries,
    newton_coeffs_to_powersums,
    newton_powersums_to_coeffs,
    poly_divrem,
    poly_shift,
    series_nth_root,
)
from .results import (
    Certificate,
    Method,
    NotFoundUpToCap,
    RealizationResult,
    ScanDiagnostic,
)
from .scalars import DEFAULT_PRECISION, RATIONAL, FloatBackend, RationalBackend, Scalar
from .shifted import (
    ShiftedCompanionCandidate,
    find_min_shifted_companion,
    prop3_p4_diagnostic,
    shifted_power_sums,
    try_shifted_companion,
)
from .spectrum import (
    AngleCheckResult,
    ConditionReport,
    Spectrum3,
    bh_check_rational_angle,
    check_jll,
    check_n3_companion,
    check_rho_ge_2a,
    jll_dimension_lower_bound,
    minimal_jll_dimension,
    minimal_zeros_nonpositive_a,
    power_sums,
)
from .verify import (
    numeric_eigen_check,
    realization_target,
    verify_against_polynomial,
    verify_realization,
)

__all__ = [
    "AngleCheckResult",
    "BackendMismatch",
    "BadAngle",
    "BadConstantTerm",
    "BadDimension",
    "BadModulus",
    "Certificate",
    "ComparisonTable",
    "ConditionReport",
    "DEFAULT_PRECISION",
    "DegreeTooSmall",
    "DenseMatrix",
    "DivisionByZeroPolynomial",
    "FloatBackend",
    "InfeasibleCandidate",
    "InfeasibleLayout",
    "LadderMismatch",
    "LaffeyCandidate",
    "Method",
    "MethodCaps",
    "MultiBlockLayout",
    "NiepError",
    "NonRealRequired",
    "NotApplicable",
    "NotFoundUpToCap",
    "NotMonic",
    "NotRealizable",
    "NotSquare",
    "ParseError",
    "PerronViolated",
    "Polynomial",
    "PowerSums",
    "RATIONAL",
    "RationalBackend",
    "RealizationResult",
    "Scalar",
    "ScanDiagnostic",
    "SelfCheckFailed",
    "ShiftedCompanionCandidate",
    "Spectrum3",
    "TruncatedSeries",
    "UsageError",
    "WrongBackend",
    "assemble_Xm",
    "assemble_multiblock",
    "bh_check_rational_angle",
    "build_laffey_candidate",
    "build_multiblock_layout",
    "charpoly",
    "check_jll",
    "check_n3_companion",
    "check_rho_ge_2a",
    "companion",
    "compare_methods",
    "compute_ftilde",
    "division_ladder",
    "find_min_laffey",
    "find_min_multiblock",
    "find_min_shifted_companion",
    "jll_dimension_lower_bound",
    "minimal_jll_dimension",
    "minimal_zeros_nonpositive_a",
    "newton_coeffs_to_powersums",
    "newton_powersums_to_coeffs",
    "numeric_eigen_check",
    "poly_divrem",
    "poly_shift",
    "power_sums",
    "prop3_p4_diagnostic",
    "realization_target",
    "series_l_coefficients",
    "series_nth_root",
    "shifted_power_sums",
    "try_shifted_companion",
    "verify_against_polynomial",
    "verify_realization",
]
