"""Realization method 2: the banded lower-Hessenberg power-sum matrix.

Scale the padded characteristic polynomial x^(m-3) f(x) by falling
factorials to get q(x), take the power sums x_1..x_m of q's roots, and
place them in a lower-triangular band with 1, 2, ..., m-1 on the
superdiagonal.  The resulting matrix has characteristic polynomial
x^(m-3) f(x), so it realizes the spectrum exactly when every x_i >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadDimension, InfeasibleCandidate
from .matrices import DenseMatrix
from .poly import Polynomial, PowerSums, newton_coeffs_to_powersums
from .results import Method, NotFoundUpToCap, RealizationResult, ScanDiagnostic
from .scalars import FloatBackend
from .spectrum import Spectrum3
from .verify import certify_or_raise

DEFAULT_DIMENSION_CAP = 512


@dataclass(frozen=True)
class LaffeyCandidate:
    """One attempt at dimension m: the scaled polynomial and its power sums."""

    m: int
    q: Polynomial
    x: PowerSums
    feasible: bool
    first_negative_index: int | None

    def min_x(self):
        """Smallest of the x_i: the feasibility margin."""
        best = self.x.s(1)
        for k in range(2, self.m + 1):
            v = self.x.s(k)
            if v < best:
                best = v
        return best


def build_laffey_candidate(sigma: Spectrum3, m: int) -> LaffeyCandidate:
    """Scale the cubic's coefficients by falling factorials and take power sums.

    q has the coefficient p_i / (m(m-1)...(m-i+1)) at degree m-i, where p_i
    is the x^(m-i) coefficient of x^(m-3) f(x); only i = 1, 2, 3 are nonzero.
    """
    if m < 3:
        raise BadDimension("this construction needs dimension at least 3")
    be = sigma.backend
    cubic = sigma.char_cubic()
    zero = be.zero()
    coeffs = [zero] * (m + 1)
    coeffs[m] = be.one()
    scale = 1
    for i in (1, 2, 3):
        scale *= m - i + 1
        coeffs[m - i] = cubic.coeff(3 - i) / scale
    q = Polynomial(tuple(coeffs))
    x = newton_coeffs_to_powersums(q, m)
    # Raw signs, not the blurred float test: the Newton recurrence keeps
    # errors relative to the x_i themselves, so even values far below the
    # tolerance band have reliable signs, and blurring would admit matrices
    # with genuinely negative entries.
    first_bad = None
    for k in range(1, m + 1):
        if not x.s(k).is_nonneg_exact():
            first_bad = k
            break
    return LaffeyCandidate(
        m=m, q=q, x=x, feasible=first_bad is None, first_negative_index=first_bad
    )


def assemble_Xm(candidate: LaffeyCandidate) -> DenseMatrix:
    """The m-by-m band matrix: (i,j) holds x_(i-j+1) for i >= j, and the
    superdiagonal holds 1, 2, ..., m-1."""
    if not candidate.feasible:
        raise InfeasibleCandidate(
            f"power sums go negative in dimension {candidate.m}"
        )
    m = candidate.m
    be = candidate.q.backend
    zero = be.zero()
    xs = [None] + list(candidate.x.values)  # 1-based
    rows = []
    for i in range(1, m + 1):
        row = [zero] * m
        for j in range(1, i + 1):
            row[j - 1] = xs[i - j + 1]
        if i < m:
            row[i] = be.scalar(i)
        rows.append(tuple(row))
    return DenseMatrix(tuple(rows))


def find_min_laffey(
    sigma: Spectrum3, m_max: int = DEFAULT_DIMENSION_CAP
) -> RealizationResult | NotFoundUpToCap:
    """Smallest dimension m in 3..m_max with all power sums nonnegative."""
    notes = []
    if isinstance(sigma.backend, FloatBackend):
        notes.append(
            "approximate: feasibility uses raw computed signs; audit the "
            "reported margin against the working precision"
        )
    diagnostics = []
    for m in range(3, m_max + 1):
        candidate = build_laffey_candidate(sigma, m)
        if candidate.feasible:
            matrix = assemble_Xm(candidate)
            cert = certify_or_raise(matrix, sigma, Method.LAFFEY)
            return RealizationResult(
                method=Method.LAFFEY,
                zeros_added=m - 3,
                matrix=matrix,
                certificate=cert,
                margin=candidate.min_x(),
                notes=tuple(notes),
            )
        diagnostics.append(
            ScanDiagnostic(
                parameter=m,
                first_bad_index=candidate.first_negative_index,
                detail=f"x_{candidate.first_negative_index} is negative",
            )
        )
    return NotFoundUpToCap(
        method=Method.LAFFEY,
        cap=m_max,
        diagnostics=tuple(diagnostics),
        notes=tuple(notes),
    )
