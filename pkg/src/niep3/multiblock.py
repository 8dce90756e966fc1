"""Realization method 3: several companion blocks chained by a division ladder.

Pick a block count N and let e(x) = x^N - l_1 x^(N-1) - ... - l_N, where the
l_i come from the N-th root of the reversed characteristic polynomial as a
power series.  Writing x^(N^2-3) f(x) in base e(x) by repeated division
yields remainders r_1..r_(N-1) and a final quotient equal to e itself; the
N^2-by-N^2 matrix built from N copies of companion(e), connector ones, and
the negated remainder coefficients along the bottom row then has
characteristic polynomial x^(N^2-3) f(x).  The construction succeeds when
the series coefficients are positive and the remainder coefficients are
all <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadDimension,
    BadModulus,
    InfeasibleLayout,
    LadderMismatch,
    SelfCheckFailed,
)
from .matrices import DenseMatrix
from .poly import Polynomial, TruncatedSeries, poly_divrem, series_nth_root
from .results import Method, NotFoundUpToCap, RealizationResult, ScanDiagnostic
from .scalars import FloatBackend
from .spectrum import Spectrum3
from .verify import certify_or_raise

DEFAULT_BLOCK_COUNT_CAP = 16


@dataclass(frozen=True)
class MultiBlockLayout:
    """A fully computed candidate: blocks, remainders, and the bottom row."""

    N: int
    l: tuple  # l_1..l_N, the negated series coefficients
    e: Polynomial  # x^N - l_1 x^(N-1) - ... - l_N
    remainders: tuple  # r_1..r_(N-1), each of degree < N
    last_row: tuple  # the N^2-N bottom-row entries left of the final block
    feasible: bool


def compute_ftilde(sigma: Spectrum3) -> Polynomial:
    """The reversed characteristic cubic (1 - rho*t)(1 - 2a*t + modsq*t^2)."""
    be = sigma.backend
    linear = Polynomial.of(be, [be.one(), -sigma.rho])
    quadratic = Polynomial.of(be, [be.one(), -2 * sigma.a, sigma.modsq])
    return linear * quadratic


def series_l_coefficients(sigma: Spectrum3, N: int):
    """Negated series coefficients of the N-th root of the reversed cubic.

    Returns (l, all_positive) with l_i = -(t^i coefficient of the root
    series), i = 1..N.  For N = 1 the root is the cubic itself, so the
    expansion runs to order 3 and l has three entries.
    """
    if N < 1:
        raise BadDimension("block count must be at least 1")
    order = 3 if N == 1 else N
    ftilde = compute_ftilde(sigma)
    series = TruncatedSeries.from_polynomial(ftilde, order)
    root = series if N == 1 else series_nth_root(series, N)
    l = tuple(-root.coeffs[i] for i in range(1, order + 1))
    all_positive = all(v.is_positive() for v in l)
    return l, all_positive


def block_polynomial(backend, l) -> Polynomial:
    """e(x) = x^N - l_1 x^(N-1) - ... - l_N from the l vector."""
    coeffs = [-v for v in reversed(l)] + [backend.one()]
    return Polynomial(tuple(coeffs))


def _coefficient_gap(p: Polynomial, q: Polynomial):
    top = max(p.degree, q.degree)
    gap = p.backend.zero()
    for j in range(top + 1):
        d = abs(p.coeff(j) - q.coeff(j))
        if d > gap:
            gap = d
    return gap


def _polys_match(p: Polynomial, q: Polynomial) -> bool:
    be = p.backend
    if isinstance(be, FloatBackend):
        from fractions import Fraction

        tol = be.from_fraction(Fraction(1, 2 ** (be.precision // 3)))
        return bool(_coefficient_gap(p, q) <= tol)
    return p == q


def division_ladder(sigma: Spectrum3, e: Polynomial, N: int):
    """Base-e digits of x^(N^2-3) f(x): remainders r_1..r_(N-1).

    Divides repeatedly by e, collecting each remainder; the final quotient
    always comes out as e itself because the difference between the padded
    polynomial and e^N has degree below N^2-N.  Both that identity and the
    exact reassembly of the dividend are re-checked before returning.
    """
    if e.degree != N or not e.is_monic():
        raise BadModulus(f"modulus must be monic of degree {N}")
    target = sigma.char_cubic().shift_degree(N * N - 3)
    remainders = []
    quotient = target
    for _ in range(N - 1):
        quotient, rem = poly_divrem(quotient, e)
        remainders.append(rem)
    if not _polys_match(quotient, e):
        raise LadderMismatch("final quotient is not the modulus itself")
    rebuilt = quotient
    for rem in reversed(remainders):
        rebuilt = rebuilt * e + rem
    if not _polys_match(rebuilt, target):
        raise SelfCheckFailed("division ladder does not reassemble its input")
    return tuple(remainders)


def build_multiblock_layout(sigma: Spectrum3, N: int) -> MultiBlockLayout:
    """Series step plus ladder step for one block count N >= 2."""
    if N < 2:
        raise BadDimension("the block layout needs at least two blocks")
    l, all_positive = series_l_coefficients(sigma, N)
    if not all_positive:
        raise InfeasibleLayout(
            "series coefficients are not all positive at this block count"
        )
    e = block_polynomial(sigma.backend, l)
    remainders = division_ladder(sigma, e, N)
    last_row = tuple(
        -remainders[u].coeff(j) for u in range(N - 1) for j in range(N)
    )
    # Raw signs: these become matrix entries, so a blurred test could admit
    # a matrix with genuinely negative entries on the float backend.
    feasible = all(v.is_nonneg_exact() for v in last_row)
    return MultiBlockLayout(
        N=N, l=l, e=e, remainders=remainders, last_row=last_row, feasible=feasible
    )


def assemble_multiblock(layout: MultiBlockLayout) -> DenseMatrix:
    """The N^2-by-N^2 matrix: companion blocks on the diagonal, a connector 1
    after each block, and the negated remainder coefficients across the
    bottom row."""
    if not layout.feasible:
        raise InfeasibleLayout(
            f"bottom row goes negative with {layout.N} blocks"
        )
    N = layout.N
    n = N * N
    be = layout.e.backend
    zero, one = be.zero(), be.one()
    grid = [[zero] * n for _ in range(n)]
    for v in range(N):
        base = v * N
        for i in range(N - 1):
            grid[base + i][base + i + 1] = one
        for j in range(N):
            grid[base + N - 1][base + j] = -layout.e.coeff(j)
    for v in range(N - 1):
        grid[(v + 1) * N - 1][(v + 1) * N] = one
    for u in range(N - 1):
        for j in range(N):
            grid[n - 1][u * N + j] = layout.last_row[u * N + j]
    return DenseMatrix(tuple(tuple(row) for row in grid))


def find_min_multiblock(
    sigma: Spectrum3, N_max: int = DEFAULT_BLOCK_COUNT_CAP
) -> RealizationResult | NotFoundUpToCap:
    """Smallest block count N in 2..N_max whose layout is feasible."""
    notes = []
    if isinstance(sigma.backend, FloatBackend):
        notes.append(
            "approximate: bottom-row feasibility uses raw computed signs; "
            "audit the reported margin against the working precision"
        )
    diagnostics = []
    for N in range(2, N_max + 1):
        l, all_positive = series_l_coefficients(sigma, N)
        if not all_positive:
            first_bad = next(
                i + 1 for i, v in enumerate(l) if not v.is_positive()
            )
            diagnostics.append(
                ScanDiagnostic(
                    parameter=N,
                    first_bad_index=first_bad,
                    detail=f"series coefficient l_{first_bad} is not positive",
                )
            )
            continue
        layout = build_multiblock_layout(sigma, N)
        if not layout.feasible:
            first_bad = next(
                i + 1
                for i, v in enumerate(layout.last_row)
                if not v.is_nonneg_exact()
            )
            diagnostics.append(
                ScanDiagnostic(
                    parameter=N,
                    first_bad_index=first_bad,
                    detail="a negated remainder coefficient is negative",
                )
            )
            continue
        matrix = assemble_multiblock(layout)
        cert = certify_or_raise(matrix, sigma, Method.MULTI_BLOCK)
        margin = layout.last_row[0]
        for v in layout.last_row[1:]:
            if v < margin:
                margin = v
        return RealizationResult(
            method=Method.MULTI_BLOCK,
            zeros_added=N * N - 3,
            matrix=matrix,
            certificate=cert,
            margin=margin,
            notes=tuple(notes) + (f"{N} companion blocks of size {N}",),
        )
    return NotFoundUpToCap(
        method=Method.MULTI_BLOCK,
        cap=N_max,
        diagnostics=tuple(diagnostics),
        notes=tuple(notes),
    )
