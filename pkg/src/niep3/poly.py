"""Dense polynomials, truncated power series, and Newton identities.

Coefficients are stored in ascending degree order (coeffs[0] is the constant
term); printed output is rendered descending, which is how the realization
methods' polynomials are usually written.  All operations stay inside one
scalar backend and are exact on the rational backend.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BackendMismatch,
    BadConstantTerm,
    DegreeTooSmall,
    DivisionByZeroPolynomial,
    NotMonic,
)
from .scalars import Scalar


def _common_backend(items):
    backend = items[0].backend
    for it in items[1:]:
        if it.backend is not backend and it.backend != backend:
            raise BackendMismatch("coefficients from different backends")
    return backend


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over one backend, coefficients ascending by degree."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if not cs:
            raise ValueError("need at least one coefficient")
        _common_backend(cs)
        # normalize: strip trailing zeros, keep at least the constant term
        n = len(cs)
        while n > 1 and cs[n - 1].is_zero():
            n -= 1
        object.__setattr__(self, "coeffs", cs[:n])

    @classmethod
    def of(cls, backend, values) -> Polynomial:
        """Build from ints, Fractions, strings, or Scalars, ascending."""
        return cls(tuple(backend.scalar(v) for v in values))

    @property
    def backend(self):
        return self.coeffs[0].backend

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        """Coefficient of x^k (zero beyond the stored degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.backend.zero()

    def leading(self) -> Scalar:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.degree == 0 and self.coeffs[0].is_zero()

    def is_monic(self) -> bool:
        return self.leading() == 1

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(tuple(out))

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        zero = self.backend.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def eval(self, x: Scalar) -> Scalar:
        """Horner evaluation."""
        acc = self.backend.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_degree(self, k: int) -> Polynomial:
        """Multiply by x^k."""
        if k == 0 or self.is_zero():
            return self
        zero = self.backend.zero()
        return Polynomial((zero,) * k + self.coeffs)

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c.is_zero() and self.degree > 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series modulo t^(order+1); coeffs has length order+1."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if not cs:
            raise ValueError("need at least the constant term")
        _common_backend(cs)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, backend, values, order: int | None = None) -> TruncatedSeries:
        cs = [backend.scalar(v) for v in values]
        if order is not None:
            zero = backend.zero()
            cs = (cs + [zero] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> TruncatedSeries:
        zero = p.backend.zero()
        cs = [p.coeff(k) if k <= p.degree else zero for k in range(order + 1)]
        return cls(tuple(cs))

    @property
    def backend(self):
        return self.coeffs[0].backend

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def mul(self, other: TruncatedSeries) -> TruncatedSeries:
        """Product truncated to the shorter order."""
        order = min(self.order, other.order)
        zero = self.backend.zero()
        out = [zero] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))

    def pow(self, n: int) -> TruncatedSeries:
        """n-th power by repeated truncated multiplication, n >= 1."""
        acc = self
        for _ in range(n - 1):
            acc = acc.mul(self)
        return acc

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)


@dataclass(frozen=True)
class PowerSums:
    """The sequence s_1..s_K; values[k-1] = s_k."""

    values: tuple

    def __post_init__(self):
        vs = tuple(self.values)
        if not vs:
            raise ValueError("need at least s_1")
        _common_backend(vs)
        object.__setattr__(self, "values", vs)

    @property
    def backend(self):
        return self.values[0].backend

    def __len__(self):
        return len(self.values)

    def s(self, k: int) -> Scalar:
        """s_k, 1-based."""
        return self.values[k - 1]


def poly_divrem(dividend: Polynomial, divisor: Polynomial):
    """Quotient and remainder with deg(remainder) < deg(divisor)."""
    if divisor.is_zero():
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    backend = _common_backend((dividend.coeffs[0], divisor.coeffs[0]))
    zero = backend.zero()
    dn = divisor.degree
    lead = divisor.leading()
    rem = list(dividend.coeffs)
    if len(rem) <= dn:
        return Polynomial((zero,)), dividend
    q = [zero] * (len(rem) - dn)
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i] / lead
        q[i - dn] = c
        if not c.is_zero():
            for j in range(dn + 1):
                rem[i - dn + j] = rem[i - dn + j] - c * divisor.coeffs[j]
    return Polynomial(tuple(q)), Polynomial(tuple(rem[:dn]) or (zero,))


def poly_shift(p: Polynomial, c: Scalar) -> Polynomial:
    """Taylor shift: the polynomial q with q(y) = p(y+c)."""
    _common_backend((p.coeffs[0], c))
    out = list(p.coeffs)
    n = len(out)
    # repeated synthetic division by (y - c), in place
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + c * out[j + 1]
    return Polynomial(tuple(out))


def poly_reverse(p: Polynomial, n: int) -> Polynomial:
    """t^n * p(1/t): the coefficient vector reversed into length n+1."""
    if n < p.degree:
        raise DegreeTooSmall(f"cannot reverse degree {p.degree} into length {n + 1}")
    zero = p.backend.zero()
    padded = list(p.coeffs) + [zero] * (n + 1 - len(p.coeffs))
    return Polynomial(tuple(reversed(padded)))


def newton_coeffs_to_powersums(p: Polynomial, K: int) -> PowerSums:
    """Power sums s_1..s_K of the roots of a monic polynomial.

    Newton recurrence: s_k + p_1 s_{k-1} + ... + p_{k-1} s_1 + k p_k = 0,
    where p_j is the coefficient of x^(n-j) and p_j = 0 for j > n.  Zero
    coefficients are skipped, so sparse inputs cost O(K) per nonzero term.
    """
    if not p.is_monic():
        raise NotMonic("power sums need a monic polynomial")
    if K < 1:
        raise ValueError("K must be at least 1")
    n = p.degree
    zero = p.backend.zero()
    # pj[j] = coefficient of x^(n-j); keep only the nonzero ones
    nonzero = []
    for j in range(1, n + 1):
        cj = p.coeff(n - j)
        if not cj.is_zero():
            nonzero.append((j, cj))
    s = [zero] * (K + 1)
    for k in range(1, K + 1):
        acc = zero
        for j, pj in nonzero:
            if j > k:
                break
            acc = acc + pj * (k if j == k else s[k - j])
        s[k] = -acc
    return PowerSums(tuple(s[1:]))


def newton_powersums_to_coeffs(s: PowerSums) -> Polynomial:
    """The unique monic polynomial of degree len(s) with these power sums.

    Inverse Newton recurrence: k p_k = -(s_k + p_1 s_{k-1} + ... + p_{k-1} s_1).
    """
    n = len(s)
    backend = s.backend
    p = [backend.zero()] * (n + 1)  # p[j] = coefficient of x^(n-j), p[0] unused
    for k in range(1, n + 1):
        acc = s.s(k)
        for j in range(1, k):
            acc = acc + p[j] * s.s(k - j)
        p[k] = -(acc / k)
    coeffs = [backend.one()] + p[1:]  # descending
    return Polynomial(tuple(reversed(coeffs)))


def series_nth_root(f: TruncatedSeries, N: int) -> TruncatedSeries:
    """The series g with g^N = f (mod t^(order+1)) and g(0) = 1.

    Term-by-term recurrence from differentiating g^N = f:
    N f g' = f' g, read off at each order.  Exact on the rational backend.
    """
    if N < 1:
        raise ValueError("root index must be at least 1")
    if f.coeffs[0] != 1:
        raise BadConstantTerm("series root needs constant term exactly 1")
    backend = f.backend
    order = f.order
    g = [backend.one()] + [backend.zero()] * order
    fc = f.coeffs
    for k in range(order):
        acc = backend.zero()
        for j in range(k + 1):
            if j + 1 <= order and not fc[j + 1].is_zero():
                acc = acc + (j + 1) * fc[j + 1] * g[k - j]
        for j in range(1, k + 1):
            if j <= order and not fc[j].is_zero():
                acc = acc - N * (k - j + 1) * fc[j] * g[k - j + 1]
        g[k + 1] = acc / (N * (k + 1))
    return TruncatedSeries(tuple(g))
