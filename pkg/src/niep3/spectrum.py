"""Spectra with exactly three nonzero elements, and their necessary conditions.

A spectrum is stored as (rho, a, modsq): the dominant real eigenvalue, the
real part of the conjugate pair, and the squared modulus m = a^2 + b^2.
Storing b squared keeps every formula rational for rational inputs; the
imaginary part is only ever needed through b^2 = modsq - a^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadAngle,
    BadDimension,
    BackendMismatch,
    NonRealRequired,
    NotApplicable,
    NotRealizable,
    PerronViolated,
)
from .poly import Polynomial, PowerSums
from .scalars import DEFAULT_PRECISION, RATIONAL, FloatBackend, RationalBackend, Scalar

# angles t (mod 2) whose cosine of t*pi is rational, by Niven's theorem
_EXACT_COS = {
    Fraction(0): Fraction(1),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(1, 2): Fraction(0),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(1): Fraction(-1),
    Fraction(4, 3): Fraction(-1, 2),
    Fraction(3, 2): Fraction(0),
    Fraction(5, 3): Fraction(1, 2),
}


@dataclass(frozen=True)
class Spectrum3:
    """(rho, a +/- ib) with rho the dominant eigenvalue and b != 0."""

    rho: Scalar
    a: Scalar
    modsq: Scalar

    def __post_init__(self):
        backend = self.rho.backend
        for s in (self.a, self.modsq):
            if s.backend is not backend and s.backend != backend:
                raise BackendMismatch("spectrum fields from different backends")
        if not self.rho.is_positive():
            raise PerronViolated("the dominant eigenvalue must be positive")
        if not (self.modsq - self.a * self.a).is_positive():
            raise NonRealRequired("modsq must exceed a^2: the pair must be non-real")
        if not (self.rho * self.rho - self.modsq).is_nonneg():
            raise PerronViolated("rho must be at least the modulus of the pair")

    @classmethod
    def of(cls, backend, rho, a, modsq) -> Spectrum3:
        return cls(backend.scalar(rho), backend.scalar(a), backend.scalar(modsq))

    @classmethod
    def from_real_imag(cls, backend, rho, a, b) -> Spectrum3:
        a = backend.scalar(a)
        b = backend.scalar(b)
        return cls(backend.scalar(rho), a, a * a + b * b)

    @classmethod
    def from_angle(cls, rho, t: Fraction, precision: int | None = None) -> Spectrum3:
        """Spectrum (rho, cos(t*pi) +/- i sin(t*pi)), modulus one.

        Angles whose cosine is rational stay on the rational backend
        (when rho is rational); any other angle forces the float backend.
        """
        if not isinstance(rho, Scalar):
            rho = RATIONAL.from_fraction(Fraction(rho))
        exact = _EXACT_COS.get(t % 2)
        if exact is not None and isinstance(rho.backend, RationalBackend):
            return cls(rho, RATIONAL.from_fraction(exact), RATIONAL.one())
        if isinstance(rho.backend, FloatBackend):
            be = rho.backend
        else:
            be = FloatBackend(precision or DEFAULT_PRECISION)
        return cls(be.scalar(rho), be.cos_pi(t), be.one())

    @property
    def backend(self):
        return self.rho.backend

    @property
    def b_squared(self) -> Scalar:
        return self.modsq - self.a * self.a

    @property
    def s1(self) -> Scalar:
        """First power sum rho + 2a."""
        return self.rho + 2 * self.a

    def strict_perron(self) -> bool:
        """rho strictly dominates the pair's modulus."""
        return (self.rho * self.rho - self.modsq).is_positive()

    def char_cubic(self) -> Polynomial:
        """(x - rho)(x^2 - 2ax + modsq), the cubic with these three roots."""
        backend = self.backend
        return Polynomial((
            -self.rho * self.modsq,
            self.modsq + 2 * self.a * self.rho,
            -self.s1,
            backend.one(),
        ))

    def describe(self) -> str:
        return f"rho={self.rho}, re={self.a}, modsq={self.modsq}"


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of one necessary-condition check."""

    name: str
    holds: bool
    witness: object = None  # margin Scalar, or the violating index
    notes: str = ""

    def __str__(self):
        verdict = "holds" if self.holds else "FAILS"
        extra = f" (witness {self.witness})" if self.witness is not None else ""
        return f"{self.name}: {verdict}{extra}"


@dataclass(frozen=True)
class AngleCheckResult:
    """Report plus the growth threshold rho0 for a modulus-one pair."""

    report: ConditionReport
    rho0: Scalar


def power_sums(sigma: Spectrum3, K: int) -> PowerSums:
    """s_k = rho^k + 2 * Re((a+ib)^k) for k = 1..K, fully rational.

    The pair's contribution t_k satisfies t_k = 2a t_{k-1} - modsq t_{k-2}
    with t_0 = 2, t_1 = 2a, so no square roots ever appear.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    backend = sigma.backend
    two_a = 2 * sigma.a
    t_prev, t_cur = backend.scalar(2), two_a
    rho_pow = sigma.rho
    out = [rho_pow + t_cur]
    for _ in range(2, K + 1):
        t_prev, t_cur = t_cur, two_a * t_cur - sigma.modsq * t_prev
        rho_pow = rho_pow * sigma.rho
        out.append(rho_pow + t_cur)
    return PowerSums(tuple(out))


def check_jll(sigma: Spectrum3, n: int, k_max: int = 8, m_max: int = 8):
    """Trace conditions s_k >= 0 and the moment inequalities
    n^(m-1) * s_{k*m} >= s_k^m, for a realization in dimension n.

    Returns one ConditionReport per check; the witness is always the margin.
    """
    if n < 3:
        raise BadDimension("dimension must be at least 3")
    if k_max < 1 or m_max < 1:
        raise ValueError("k_max and m_max must be at least 1")
    s = power_sums(sigma, k_max * m_max)
    reports = []
    for k in range(1, k_max + 1):
        sk = s.s(k)
        reports.append(ConditionReport(
            name=f"s[{k}] >= 0",
            holds=sk.is_nonneg(),
            witness=sk,
        ))
    for k in range(1, k_max + 1):
        for m in range(1, m_max + 1):
            if k * m < 2:
                continue
            margin = n ** (m - 1) * s.s(k * m) - s.s(k) ** m
            reports.append(ConditionReport(
                name=f"moment(k={k}, m={m}, n={n})",
                holds=margin.is_nonneg(),
                witness=margin,
            ))
    return reports


def check_n3_companion(sigma: Spectrum3) -> ConditionReport:
    """Whether a 3x3 nonnegative matrix with this spectrum exists:
    rho - a must be at least b*sqrt(3), decided by comparing squares."""
    gap = sigma.rho - sigma.a
    margin = gap * gap - 3 * sigma.b_squared
    holds = gap.is_nonneg() and margin.is_nonneg()
    return ConditionReport(
        name="3x3 realizability: (rho-re)^2 >= 3*(modsq-re^2)",
        holds=holds,
        witness=margin,
    )


def check_rho_ge_2a(sigma: Spectrum3) -> ConditionReport:
    """Whether rho >= 2a, the exact feasibility line for one added zero."""
    margin = sigma.rho - 2 * sigma.a
    return ConditionReport(
        name="rho >= 2*re",
        holds=margin.is_nonneg(),
        witness=margin,
        notes="decides 4x4 mean-shifted companion feasibility",
    )


def minimal_zeros_nonpositive_a(sigma: Spectrum3) -> int:
    """For a <= 0: the least N >= 0 with (N+3) * s_2 >= s_1^2.

    With a nonpositive real part these two inequalities are the whole story,
    so the minimum is a closed-form ceiling rather than a scan.
    """
    if sigma.a.is_positive():
        raise NotApplicable("closed-form minimal zeros only covers re <= 0")
    s = power_sums(sigma, 2)
    s1, s2 = s.s(1), s.s(2)
    if not s1.is_nonneg():
        raise NotRealizable("s_1 < 0: no nonnegative matrix has negative trace")
    if not s2.is_nonneg():
        raise NotRealizable("s_2 < 0: trace of the square would be negative")
    if s2.is_zero():
        if s1.is_zero():
            return 0
        raise NotRealizable("s_2 = 0 with s_1 > 0 cannot be padded into feasibility")
    need = math.ceil((s1 * s1 / s2).as_fraction())
    return max(0, need - 3)


def _float_of(value: Scalar) -> Scalar:
    if isinstance(value.backend, FloatBackend):
        return value
    return FloatBackend(DEFAULT_PRECISION).scalar(value)


def bh_check_rational_angle(rho: Scalar, l: int) -> AngleCheckResult:
    """For the pair on the unit circle at angle pi/l: check that
    rho^k + 2cos(k*pi/l) > 0 for every k >= 1, and report the threshold
    rho0 = max over 0 <= k <= floor(l/2) of (2cos(k*pi/l))^(1/(l-k)).

    Periodicity makes k = 1..2l a complete check: beyond that the cosine
    repeats while rho^k only grows (and any rho < 1 already fails at k = l).
    """
    if l < 2:
        raise BadAngle("the angle denominator must be at least 2")
    r = _float_of(rho)
    be = r.backend
    failing_k = None
    min_margin = None
    for k in range(1, 2 * l + 1):
        val = r**k + 2 * be.cos_pi(Fraction(k, l))
        if not val.is_positive():
            failing_k = k
            break
        if min_margin is None or val < min_margin:
            min_margin = val
    rho0 = be.zero()
    for k in range(0, l // 2 + 1):
        c = 2 * be.cos_pi(Fraction(k, l))
        if c.is_positive():
            term = be.root(c, l - k)
            if term > rho0:
                rho0 = term
    if failing_k is None:
        report = ConditionReport(
            name=f"power sums positive (angle pi/{l})",
            holds=True,
            witness=min_margin,
            notes=f"checked k = 1..{2 * l}; larger k repeat the cosine while rho^k grows",
        )
    else:
        report = ConditionReport(
            name=f"power sums positive (angle pi/{l})",
            holds=False,
            witness=failing_k,
            notes=f"rho^{failing_k} + 2cos({failing_k}*pi/{l}) <= 0",
        )
    return AngleCheckResult(report=report, rho0=rho0)


def jll_dimension_lower_bound(rho: Scalar, l: int, m_cap: int = 1_000_000) -> int:
    """The least dimension M compatible with the moment inequalities for
    the spectrum (rho, pair at angle pi/l) padded with zeros:
    M^(l-k-1) * (rho^(l-k) - 2cos(k*pi/l)) >= (rho + 2cos(pi/l))^(l-k)
    for all 0 <= k <= floor(l/2), found by scanning M upward."""
    result = bh_check_rational_angle(rho, l)
    r = _float_of(rho)
    be = r.backend
    if not (r - result.rho0).is_positive():
        raise NotApplicable("rho must strictly exceed the growth threshold rho0")
    cos_k = [2 * be.cos_pi(Fraction(k, l)) for k in range(0, l // 2 + 1)]
    base = r + cos_k[1]  # rho + 2cos(pi/l); l >= 2 guarantees the index
    for M in range(1, m_cap + 1):
        ok = True
        for k, c in enumerate(cos_k):
            lhs = M ** (l - k - 1) * (r ** (l - k) - c)
            if not (lhs - base ** (l - k)).is_nonneg():
                ok = False
                break
        if ok:
            return M
    raise RuntimeError(f"no dimension bound found below {m_cap}")


def minimal_jll_dimension(sigma: Spectrum3, n_cap: int = 64,
                          k_max: int = 8, m_max: int = 8) -> int | None:
    """Least n >= 3 passing every check in check_jll, or None up to n_cap."""
    for n in range(3, n_cap + 1):
        if all(r.holds for r in check_jll(sigma, n, k_max, m_max)):
            return n
    return None
