"""Independent certification of claimed realizations.

Every construction in this package re-checks its own output through these
functions, which share no code path with the constructions themselves: the
characteristic polynomial is recomputed from the matrix entries and compared
against the target built directly from the spectrum.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendMismatch, BadDimension, SelfCheckFailed, WrongBackend
from .matrices import DenseMatrix, charpoly
from .poly import Polynomial
from .results import Certificate, Method
from .scalars import FloatBackend, RationalBackend, Scalar
from .spectrum import Spectrum3


def _match_tolerance(backend: FloatBackend) -> Scalar:
    """Allowed per-coefficient deviation: one third of the precision budget."""
    return backend.from_fraction(Fraction(1, 2 ** (backend.precision // 3)))


def verify_against_polynomial(matrix: DenseMatrix, target: Polynomial) -> Certificate:
    """Certify that `matrix` is entrywise nonnegative with the given charpoly.

    The target polynomial must live on the matrix backend, except that a
    rational target is promoted automatically when the matrix is float-backed.
    """
    be = matrix.backend
    if target.backend is not be and target.backend != be:
        if isinstance(be, FloatBackend) and isinstance(target.backend, RationalBackend):
            target = Polynomial.of(be, [c.as_fraction() for c in target.coeffs])
        else:
            raise BackendMismatch(
                "target polynomial backend does not match the matrix backend"
            )
    nonnegative = matrix.is_nonneg()
    computed = charpoly(matrix)
    if isinstance(be, RationalBackend):
        return Certificate(
            nonnegative=nonnegative,
            charpoly_match=(computed == target),
            backend_name="rational",
        )
    tol = _match_tolerance(be)
    residual = be.zero()
    top = max(computed.degree, target.degree)
    for j in range(top + 1):
        gap = abs(computed.coeff(j) - target.coeff(j))
        if gap > residual:
            residual = gap
    return Certificate(
        nonnegative=nonnegative,
        charpoly_match=bool(residual <= tol),
        backend_name="float",
        precision=be.precision,
        tolerance_used=tol,
        residual=residual,
    )


def realization_target(matrix_dim: int, sigma: Spectrum3) -> Polynomial:
    """Target charpoly for a dim-sized realization: the cubic padded with zeros."""
    if matrix_dim < 3:
        raise BadDimension("a realization needs dimension at least 3")
    return sigma.char_cubic().shift_degree(matrix_dim - 3)


def verify_realization(matrix: DenseMatrix, sigma: Spectrum3) -> Certificate:
    """Certify that `matrix` realizes `sigma` plus dim-3 zeros."""
    target = realization_target(matrix.dim, sigma)
    return verify_against_polynomial(matrix, target)


def certify_or_raise(matrix: DenseMatrix, sigma: Spectrum3, method: Method) -> Certificate:
    """Internal guard for the construction pipelines."""
    cert = verify_realization(matrix, sigma)
    if not cert.ok:
        raise SelfCheckFailed(
            f"{method.value} produced a matrix that failed certification: {cert}"
        )
    return cert


def numeric_eigen_check(matrix: DenseMatrix, sigma: Spectrum3, tol=None) -> bool:
    """Floating sanity check: the charpoly nearly vanishes on the spectrum.

    Evaluates the recomputed characteristic polynomial at the dominant value,
    at both members of the conjugate pair, and at zero, and demands every
    magnitude stay below `tol` (default 1e-6). Float-backend matrices only;
    exact matrices should be certified exactly instead.
    """
    be = matrix.backend
    if not isinstance(be, FloatBackend):
        raise WrongBackend("numeric_eigen_check expects a float-backend matrix")
    if tol is None:
        tol = be.from_fraction(Fraction(1, 10**6))
    elif isinstance(tol, Fraction):
        tol = be.from_fraction(tol)
    p = charpoly(matrix)

    def to_be(x: Scalar) -> Scalar:
        return x if x.backend is be else be.from_fraction(x.as_fraction())

    rho = to_be(sigma.rho)
    a = to_be(sigma.a)
    b = be.sqrt(to_be(sigma.b_squared))
    zero = be.zero()

    def eval_complex(re: Scalar, im: Scalar) -> Scalar:
        acc_re, acc_im = p.leading(), zero
        for j in range(p.degree - 1, -1, -1):
            acc_re, acc_im = (
                acc_re * re - acc_im * im + p.coeff(j),
                acc_re * im + acc_im * re,
            )
        return be.sqrt(acc_re * acc_re + acc_im * acc_im)

    checks = [
        abs(p.eval(rho)),
        eval_complex(a, b),
        eval_complex(a, -b),
        abs(p.coeff(0)),  # value at zero; the padded spectrum always contains 0
    ]
    return all(bool(v <= tol) for v in checks)
