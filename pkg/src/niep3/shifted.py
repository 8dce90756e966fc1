"""Realization method 1: a scalar shift of a trace-zero companion matrix.

To realize the spectrum plus N zeros in dimension m = N+3, subtract the
eigenvalue mean alpha = s1/m from every eigenvalue, build the companion
matrix C of the shifted characteristic polynomial, and return alpha*I + C.
C is nonnegative exactly when every non-leading coefficient of the shifted
polynomial is <= 0, which makes feasibility a finite sign check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import BadDimension, InfeasibleCandidate
from .matrices import DenseMatrix, companion
from .poly import Polynomial, PowerSums, poly_shift
from .results import Method, NotFoundUpToCap, RealizationResult, ScanDiagnostic
from .scalars import FloatBackend, Scalar
from .spectrum import Spectrum3, power_sums
from .verify import certify_or_raise

DEFAULT_DIMENSION_CAP = 512


@dataclass(frozen=True)
class ShiftedCompanionCandidate:
    """One attempt at m = N+3: the shifted polynomial and its sign verdict.

    `first_positive_coeff_index` is the lowest degree whose coefficient has
    the wrong sign, or None when the coefficients are all admissible.  A
    candidate with admissible coefficients can still be infeasible when the
    shift itself is negative (s1 < 0): a matrix with negative trace cannot
    be nonnegative, so such candidates are rejected with index None.
    """

    N: int
    alpha: Scalar
    shifted_poly: Polynomial
    feasible: bool
    first_positive_coeff_index: int | None

    @property
    def m(self) -> int:
        return self.N + 3

    def matrix(self) -> DenseMatrix:
        """The m-by-m realization alpha*I + companion(shifted_poly)."""
        if not self.feasible:
            raise InfeasibleCandidate(
                f"no nonnegative shifted companion in dimension {self.m}"
            )
        return companion(self.shifted_poly).add_diagonal(self.alpha)

    def slack(self) -> Scalar:
        """Distance to the nearest sign violation: min over non-leading
        coefficients of -coeff, excluding the structurally-zero trace term."""
        be = self.shifted_poly.backend
        best = None
        for j in range(self.m - 1):
            v = -self.shifted_poly.coeff(j)
            if best is None or v < best:
                best = v
        return best if best is not None else be.zero()


def _shifted_from_cubic(sigma: Spectrum3, N: int, alpha: Scalar) -> Polynomial:
    """(y+alpha)^N * cubic(y+alpha), assembled coefficient by coefficient.

    Shifting the two factors separately and convolving costs O(N) instead of
    the O(N^2) of a Taylor shift of the full degree-(N+3) polynomial, which
    keeps deep dimension scans affordable.
    """
    be = sigma.backend
    cubic = poly_shift(sigma.char_cubic(), alpha)
    powers = [be.one()]
    for _ in range(N):
        powers.append(powers[-1] * alpha)
    out = [be.zero()] * (N + 4)
    for k in range(N + 1):
        binom = comb(N, k) * powers[N - k]
        for j in range(4):
            out[k + j] = out[k + j] + binom * cubic.coeff(j)
    return Polynomial(tuple(out))


def try_shifted_companion(sigma: Spectrum3, N: int) -> ShiftedCompanionCandidate:
    """Attempt the mean-shifted companion construction with N added zeros."""
    if N < 0:
        raise BadDimension("cannot add a negative number of zeros")
    m = N + 3
    alpha = sigma.s1 / m
    shifted = _shifted_from_cubic(sigma, N, alpha)
    first_bad = None
    for j in range(m):
        if shifted.coeff(j).is_positive():
            first_bad = j
            break
    feasible = first_bad is None and alpha.is_nonneg()
    return ShiftedCompanionCandidate(
        N=N,
        alpha=alpha,
        shifted_poly=shifted,
        feasible=feasible,
        first_positive_coeff_index=first_bad,
    )


def shifted_power_sums(sigma: Spectrum3, dim: int, K: int) -> PowerSums:
    """Power sums of the mean-shifted padded spectrum.

    The padded spectrum is sigma plus dim-3 zeros; subtracting the mean
    alpha = s1/dim turns each s_k into sum_j C(k,j) (-alpha)^(k-j) s_j with
    s_0 = dim.  The first shifted power sum is 0 by construction.
    """
    if dim < 3:
        raise BadDimension("padded spectrum needs dimension at least 3")
    be = sigma.backend
    alpha = sigma.s1 / dim
    s = power_sums(sigma, K)
    neg_pow = [be.one()]
    for _ in range(K):
        neg_pow.append(neg_pow[-1] * -alpha)
    out = []
    for k in range(1, K + 1):
        acc = dim * neg_pow[k]
        for j in range(1, k + 1):
            acc = acc + comb(k, j) * neg_pow[k - j] * s.s(j)
        out.append(acc)
    return PowerSums(tuple(out))


def prop3_p4_diagnostic(sigma: Spectrum3, N: int):
    """Asymptotic infeasibility diagnostic at total dimension N >= 4.

    Returns (p4, check): p4 is the coefficient of x^(N-4) in the shifted
    polynomial, extracted directly; check is the closed-form value
    ((2a+rho)(N-3)/(2N^3)) * f(N), with f a quadratic in N whose leading
    coefficient is (rho-2a)(rho^2+4b^2).  The two are tied by
    p4 = -(1/4) * check exactly, so a positive p4 for all large N (which
    happens exactly when rho < 2a) rules the method out asymptotically.
    """
    if N < 4:
        raise BadDimension("the x^(N-4) coefficient needs dimension at least 4")
    candidate = try_shifted_companion(sigma, N - 3)
    p4 = candidate.shifted_poly.coeff(N - 4)

    rho, a = sigma.rho, sigma.a
    b2 = sigma.b_squared
    lead = (rho - 2 * a) * (rho * rho + 4 * b2)
    mid = (
        4 * rho * a * a
        + 8 * rho * b2
        + 16 * a * b2
        - (3 * rho * rho * rho + 2 * rho * rho * a + 8 * a * a * a)
    )
    const = (
        12 * rho * rho * a
        + 24 * rho * a * a
        + 2 * rho * rho * rho
        + 16 * a * a * a
    )
    f_of_n = lead * (N * N) + mid * N + const
    check = (2 * a + rho) * (N - 3) * f_of_n / (2 * N * N * N)
    return p4, check


def find_min_shifted_companion(
    sigma: Spectrum3, N_max: int = DEFAULT_DIMENSION_CAP
) -> RealizationResult | NotFoundUpToCap:
    """Smallest zero count N in 0..N_max admitting the shifted construction."""
    notes = []
    if (2 * sigma.a - sigma.rho).is_positive():
        notes.append(
            "rho < 2*re: the x^(m-4) coefficient turns positive for every "
            "large dimension m, so only small dimensions can succeed"
        )
    if isinstance(sigma.backend, FloatBackend):
        notes.append("approximate: float-backend sign tests use a tolerance")
    diagnostics = []
    for N in range(N_max + 1):
        candidate = try_shifted_companion(sigma, N)
        if candidate.feasible:
            matrix = candidate.matrix()
            cert = certify_or_raise(matrix, sigma, Method.SHIFTED_COMPANION)
            return RealizationResult(
                method=Method.SHIFTED_COMPANION,
                zeros_added=N,
                matrix=matrix,
                certificate=cert,
                margin=candidate.slack(),
                notes=tuple(notes),
            )
        if candidate.first_positive_coeff_index is not None:
            detail = f"coefficient of x^{candidate.first_positive_coeff_index} is positive"
        else:
            detail = "shift s1/m is negative"
        diagnostics.append(
            ScanDiagnostic(
                parameter=N,
                first_bad_index=candidate.first_positive_coeff_index,
                detail=detail,
            )
        )
    return NotFoundUpToCap(
        method=Method.SHIFTED_COMPANION,
        cap=N_max,
        diagnostics=tuple(diagnostics),
        notes=tuple(notes),
    )
