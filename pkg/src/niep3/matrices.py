"""Dense square matrices over one scalar backend, and characteristic polynomials.

Two charpoly algorithms are provided: the Faddeev-LeVerrier trace recursion
(general, O(n^4) scalar operations) and an O(n^3) recurrence valid for lower
Hessenberg matrices (zero above the first superdiagonal).  Every matrix the
construction methods build is lower Hessenberg, so the default dispatch uses
the fast path there; the two are checked against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BackendMismatch, DegreeTooSmall, NotMonic, NotSquare
from .poly import Polynomial
from .scalars import RATIONAL, RationalBackend, Scalar


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major matrix; all entries share one backend."""

    rows: tuple  # tuple of tuples of Scalar

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one entry")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        backend = rows[0][0].backend
        for r in rows:
            for e in r:
                if e.backend is not backend and e.backend != backend:
                    raise BackendMismatch("entries from different backends")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, backend, rows) -> DenseMatrix:
        """Build from ints, Fractions, strings, or Scalars."""
        return cls(tuple(tuple(backend.scalar(e) for e in r) for r in rows))

    @classmethod
    def identity(cls, backend, n: int) -> DenseMatrix:
        one, zero = backend.one(), backend.zero()
        return cls(tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    @property
    def backend(self):
        return self.rows[0][0].backend

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def dim(self) -> int:
        if not self.is_square():
            raise NotSquare(f"{self.nrows}x{self.ncols} matrix")
        return self.nrows

    def entry(self, i: int, j: int) -> Scalar:
        """0-based access."""
        return self.rows[i][j]

    def mul(self, other: DenseMatrix) -> DenseMatrix:
        if self.ncols != other.nrows:
            raise NotSquare("inner dimensions disagree")
        backend = self.backend
        if other.backend != backend:
            raise BackendMismatch("matrix product across backends")
        a = [[e.value for e in r] for r in self.rows]
        b = [[e.value for e in r] for r in other.rows]
        raw = _matmul_raw(backend, a, b)
        return DenseMatrix(tuple(tuple(Scalar(v, backend) for v in r) for r in raw))

    def add_diagonal(self, c: Scalar) -> DenseMatrix:
        n = self.dim
        return DenseMatrix(tuple(
            tuple(self.rows[i][j] + c if i == j else self.rows[i][j]
                  for j in range(n))
            for i in range(n)))

    def trace(self) -> Scalar:
        n = self.dim
        acc = self.backend.zero()
        for i in range(n):
            acc = acc + self.rows[i][i]
        return acc

    def min_entry(self) -> Scalar:
        return min((e for r in self.rows for e in r))

    def is_nonneg(self) -> bool:
        """Entrywise >= 0, with the backend's sign tolerance."""
        return all(e.is_nonneg() for r in self.rows for e in r)

    def is_lower_hessenberg(self) -> bool:
        return all(self.rows[i][j].is_zero()
                   for i in range(self.nrows)
                   for j in range(i + 2, self.ncols))

    def to_backend(self, backend) -> DenseMatrix:
        """Convert entries; float -> rational is exact, rational -> float rounds."""
        if backend == self.backend:
            return self
        if isinstance(backend, RationalBackend):
            return DenseMatrix(tuple(
                tuple(backend.from_fraction(e.as_fraction()) for e in r)
                for r in self.rows))
        return DenseMatrix(tuple(tuple(backend.scalar(e) for e in r)
                                 for r in self.rows))

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def companion(p: Polynomial) -> DenseMatrix:
    """Companion matrix: ones on the superdiagonal, negated coefficients of
    the monic input across the last row; det(xI - companion(p)) = p(x)."""
    if not p.is_monic():
        raise NotMonic("companion matrix needs a monic polynomial")
    n = p.degree
    if n < 1:
        raise DegreeTooSmall("companion matrix needs degree >= 1")
    backend = p.backend
    one, zero = backend.one(), backend.zero()
    rows = []
    for i in range(n - 1):
        rows.append(tuple(one if j == i + 1 else zero for j in range(n)))
    rows.append(tuple(-p.coeff(j) for j in range(n)))
    return DenseMatrix(tuple(rows))


def _matmul_raw(backend, a, b):
    n, k, m = len(a), len(b), len(b[0])
    zero = backend.zero().value
    mul, add = backend._mul, backend._add
    out = []
    for i in range(n):
        row_a = a[i]
        row_out = [zero] * m
        for t in range(k):
            x = row_a[t]
            if x == 0:
                continue
            row_b = b[t]
            for j in range(m):
                y = row_b[j]
                if y == 0:
                    continue
                row_out[j] = add(row_out[j], mul(x, y))
        out.append(row_out)
    return out


def _charpoly_faddeev(A: DenseMatrix) -> Polynomial:
    # M := I; repeat: AM := A*M, c_{n-k} := -tr(AM)/k, M := AM + c_{n-k} I
    n = A.dim
    backend = A.backend
    zero, one = backend.zero().value, backend.one().value
    add, mul, div = backend._add, backend._mul, backend._div
    a = [[e.value for e in r] for r in A.rows]
    m = [[one if i == j else zero for j in range(n)] for i in range(n)]
    coeffs = [zero] * n + [one]  # ascending; leading 1
    for k in range(1, n + 1):
        am = _matmul_raw(backend, a, m)
        tr = zero
        for i in range(n):
            tr = add(tr, am[i][i])
        c = backend._neg(div(tr, k))
        coeffs[n - k] = c
        for i in range(n):
            am[i][i] = add(am[i][i], c)
        m = am
    return Polynomial(tuple(Scalar(v, backend) for v in coeffs))


def _charpoly_hessenberg(A: DenseMatrix) -> Polynomial:
    # p_0 = 1; p_k = (x - A[k][k]) p_{k-1}
    #              - sum_i A[k][i] (prod_{j=i..k-1} A[j][j+1]) p_{i-1}
    # (0-based rows/cols inside; the comment indices are 1-based)
    n = A.dim
    backend = A.backend
    zero = backend.zero().value
    add, sub, mul = backend._add, backend._sub, backend._mul
    a = [[e.value for e in r] for r in A.rows]
    ps = [[backend.one().value]]  # ps[k] = coeffs of p_k, ascending
    for k in range(1, n + 1):
        prev = ps[k - 1]
        cur = [zero] * (k + 1)
        d = a[k - 1][k - 1]
        for i, c in enumerate(prev):
            cur[i + 1] = add(cur[i + 1], c)
            if c != 0 and d != 0:
                cur[i] = sub(cur[i], mul(d, c))
        w = None  # running superdiagonal product, built highest i first
        for i in range(k - 1, 0, -1):
            beta = a[i - 1][i]
            w = beta if w is None else mul(w, beta)
            if w == 0:
                break
            low = a[k - 1][i - 1]
            if low == 0:
                continue
            factor = mul(low, w)
            for t, c in enumerate(ps[i - 1]):
                if c != 0:
                    cur[t] = sub(cur[t], mul(factor, c))
        ps.append(cur)
    return Polynomial(tuple(Scalar(v, backend) for v in ps[n]))


def charpoly(A: DenseMatrix, algorithm: str = "auto") -> Polynomial:
    """det(xI - A), monic of degree A.dim.

    algorithm: "auto" picks the Hessenberg recurrence when the shape allows,
    otherwise Faddeev-LeVerrier; both can be forced by name.
    """
    if not A.is_square():
        raise NotSquare(f"{A.nrows}x{A.ncols} matrix")
    if algorithm == "auto":
        algorithm = ("hessenberg" if A.is_lower_hessenberg()
                     else "faddeev-leverrier")
    if algorithm == "hessenberg":
        if not A.is_lower_hessenberg():
            raise ValueError("matrix is not lower Hessenberg")
        return _charpoly_hessenberg(A)
    if algorithm == "faddeev-leverrier":
        return _charpoly_faddeev(A)
    raise ValueError(f"unknown charpoly algorithm {algorithm!r}")
