"""Backend-tagged scalar arithmetic.

Two backends are supported.  The rational backend wraps fractions.Fraction
and is exact: every result is a reduced fraction with a positive denominator.
The float backend wraps gmpy2.mpfr at a fixed precision of P >= 64 bits; all
arithmetic is correctly rounded at that precision through a dedicated gmpy2
context, and sign queries use the tolerance eps = 2^(-P/2) so rounding noise
cannot flip a feasibility verdict.

Every Scalar remembers the backend that produced it and refuses arithmetic
with scalars from a different backend (BackendMismatch), so an exact pipeline
can never silently degrade to floating point.  Plain Python ints mix freely
with either backend since they are exact in both.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

from .errors import BackendMismatch, ParseError

DEFAULT_PRECISION = 256


class RationalBackend:
    """Exact arithmetic on arbitrary-size rationals."""

    __slots__ = ()
    name = "rational"
    precision = None
    is_exact = True

    def __repr__(self):
        return "RationalBackend()"

    def __eq__(self, other):
        return isinstance(other, RationalBackend)

    def __hash__(self):
        return hash(RationalBackend)

    # raw-value arithmetic, used by Scalar

    @staticmethod
    def _add(x, y):
        return x + y

    @staticmethod
    def _sub(x, y):
        return x - y

    @staticmethod
    def _mul(x, y):
        return x * y

    @staticmethod
    def _div(x, y):
        return x / y

    @staticmethod
    def _pow(x, k):
        return x ** k

    @staticmethod
    def _neg(x):
        return -x

    @staticmethod
    def _abs(x):
        return abs(x)

    @staticmethod
    def _raw(value):
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        raise TypeError(f"cannot convert {value!r} to a rational scalar")

    def _nonneg(self, value):
        return value >= 0

    def _positive(self, value):
        return value > 0

    # construction

    def scalar(self, value) -> Scalar:
        """Wrap an int, Fraction, decimal/fraction string, or Scalar."""
        if isinstance(value, Scalar):
            if value.backend != self:
                raise BackendMismatch("value belongs to another backend")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return Scalar(self._raw(value), self)

    def parse(self, text: str) -> Scalar:
        """Parse "7/5", "1.4", or "33" exactly."""
        try:
            return Scalar(Fraction(text.strip()), self)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def zero(self) -> Scalar:
        return Scalar(Fraction(0), self)

    def one(self) -> Scalar:
        return Scalar(Fraction(1), self)

    def from_fraction(self, fr: Fraction) -> Scalar:
        return Scalar(Fraction(fr), self)


class FloatBackend:
    """Correctly rounded binary floats at a fixed precision."""

    __slots__ = ("precision", "ctx", "_eps", "_neg_eps")
    name = "float"
    is_exact = False

    def __init__(self, precision: int = DEFAULT_PRECISION):
        if precision < 64:
            raise ValueError("float backend needs at least 64 bits")
        self.precision = precision
        self.ctx = gmpy2.context(precision=precision)
        # sign tolerance: rounding noise must not flip feasibility verdicts
        self._eps = gmpy2.mpfr(Fraction(1, 2 ** (precision // 2)), precision)
        self._neg_eps = self.ctx.minus(self._eps)

    def __repr__(self):
        return f"FloatBackend({self.precision})"

    def __eq__(self, other):
        return isinstance(other, FloatBackend) and other.precision == self.precision

    def __hash__(self):
        return hash((FloatBackend, self.precision))

    def _add(self, x, y):
        return self.ctx.add(x, y)

    def _sub(self, x, y):
        return self.ctx.sub(x, y)

    def _mul(self, x, y):
        return self.ctx.mul(x, y)

    def _div(self, x, y):
        return self.ctx.div(x, y)

    def _pow(self, x, k):
        return self.ctx.pow(x, k)

    def _neg(self, x):
        # bare -x would round to the ambient gmpy2 context, not ours
        return self.ctx.minus(x)

    def _abs(self, x):
        return self.ctx.abs(x)

    def _raw(self, value):
        if isinstance(value, int):
            return gmpy2.mpfr(value, self.precision)
        if isinstance(value, Fraction):
            q = gmpy2.mpq(int(value.numerator), int(value.denominator))
            return gmpy2.mpfr(q, self.precision)
        if isinstance(value, type(self._eps)):
            return value
        raise TypeError(f"cannot convert {value!r} to a float scalar")

    def _nonneg(self, value):
        return value >= self._neg_eps

    def _positive(self, value):
        return value > self._eps

    def scalar(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.backend == self:
                return value
            if isinstance(value.backend, RationalBackend):
                return self.from_fraction(value.value)
            raise BackendMismatch("value belongs to another float backend")
        if isinstance(value, str):
            return self.parse(value)
        return Scalar(self._raw(value), self)

    def parse(self, text: str) -> Scalar:
        """Parse a rational literal exactly, rounding once to P bits.

        Also accepts the exact hex form "0x<mantissa>p<exponent>" emitted by
        Scalar.hex(), which round-trips bit for bit.
        """
        text = text.strip()
        neg = text.startswith("-")
        body = text[1:] if neg else text
        if body.lower().startswith("0x") and "p" in body.lower():
            mant_s, _, exp_s = body.lower()[2:].partition("p")
            try:
                mant, exp = int(mant_s, 16), int(exp_s)
            except ValueError as exc:
                raise ParseError(f"bad hex float literal {text!r}") from exc
            value = Fraction(mant) * Fraction(2) ** exp
        else:
            try:
                value = Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad numeric literal {text!r}") from exc
        if neg:
            value = -value
        return self.from_fraction(value)

    def zero(self) -> Scalar:
        return Scalar(gmpy2.mpfr(0, self.precision), self)

    def one(self) -> Scalar:
        return Scalar(gmpy2.mpfr(1, self.precision), self)

    def from_fraction(self, fr: Fraction) -> Scalar:
        q = gmpy2.mpq(int(fr.numerator), int(fr.denominator))
        return Scalar(gmpy2.mpfr(q, self.precision), self)

    def eps(self) -> Scalar:
        """The sign tolerance 2^(-P/2) as a scalar."""
        return Scalar(self._eps, self)

    # transcendental helpers, only meaningful on this backend

    def pi(self) -> Scalar:
        return Scalar(self.ctx.const_pi(), self)

    def cos_pi(self, t: Fraction) -> Scalar:
        """cos(t*pi) for an exact rational multiple t."""
        q = gmpy2.mpq(int(t.numerator), int(t.denominator))
        return Scalar(self.ctx.cos(self.ctx.mul(q, self.ctx.const_pi())), self)

    def sin_pi(self, t: Fraction) -> Scalar:
        q = gmpy2.mpq(int(t.numerator), int(t.denominator))
        return Scalar(self.ctx.sin(self.ctx.mul(q, self.ctx.const_pi())), self)

    def sqrt(self, x: Scalar) -> Scalar:
        return Scalar(self.ctx.sqrt(self.scalar(x).value), self)

    def root(self, x: Scalar, n: int) -> Scalar:
        """Principal n-th root of a nonnegative scalar."""
        return Scalar(self.ctx.rootn(self.scalar(x).value, n), self)


RATIONAL = RationalBackend()


class Scalar:
    """A number tagged with the backend that produced it."""

    __slots__ = ("value", "backend")

    def __init__(self, value, backend):
        self.value = value
        self.backend = backend

    def _peer(self, other):
        # raw value of the other operand, enforcing a common backend
        if isinstance(other, Scalar):
            b = other.backend
            if b is self.backend or b == self.backend:
                return other.value
            raise BackendMismatch(
                f"mixed backends {self.backend!r} and {other.backend!r}")
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return self.backend._raw(other)
        return None

    def __add__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._add(self.value, v), self.backend)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._sub(self.value, v), self.backend)

    def __rsub__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._sub(v, self.value), self.backend)

    def __mul__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._mul(self.value, v), self.backend)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._div(self.value, v), self.backend)

    def __rtruediv__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return Scalar(self.backend._div(v, self.value), self.backend)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return Scalar(self.backend._pow(self.value, k), self.backend)

    def __neg__(self):
        return Scalar(self.backend._neg(self.value), self.backend)

    def __abs__(self):
        return Scalar(self.backend._abs(self.value), self.backend)

    def __eq__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return self.value < v

    def __le__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return self.value <= v

    def __gt__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return self.value > v

    def __ge__(self, other):
        v = self._peer(other)
        if v is None:
            return NotImplemented
        return self.value >= v

    def __hash__(self):
        return hash((self.backend, self.value))

    def __bool__(self):
        return self.value != 0

    # sign queries; tolerant on the float backend

    def is_zero(self) -> bool:
        return self.value == 0

    def is_nonneg(self) -> bool:
        """value >= 0, up to the backend sign tolerance."""
        return self.backend._nonneg(self.value)

    def is_positive(self) -> bool:
        """value > 0, beyond the backend sign tolerance."""
        return self.backend._positive(self.value)

    def is_nonneg_exact(self) -> bool:
        """value >= 0 with no tolerance blur: the raw sign of the stored
        value.  On the float backend this is the right test for quantities
        whose computation keeps errors relative (so tiny magnitudes still
        carry trustworthy signs); the blurred is_nonneg would wave through
        genuinely negative values that happen to sit inside the band."""
        return self.value >= 0

    # conversions

    def as_fraction(self) -> Fraction:
        """The exact value (floats are exact dyadic rationals)."""
        if isinstance(self.value, Fraction):
            return self.value
        num, den = self.value.as_integer_ratio()
        return Fraction(int(num), int(den))

    def __float__(self):
        return float(self.value)

    def hex(self) -> str:
        """Exact lossless text form: "num/den" or "0x<mantissa>p<exp>"."""
        if isinstance(self.value, Fraction):
            return str(self.value)
        if self.value == 0:
            return "0x0p0"
        mant, exp = self.value.as_mantissa_exp()
        sign = "-" if mant < 0 else ""
        return f"{sign}0x{abs(int(mant)):x}p{int(exp)}"

    def __repr__(self):
        return f"Scalar({self.value})"

    def __str__(self):
        return str(self.value)
