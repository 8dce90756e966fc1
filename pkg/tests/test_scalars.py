"""Scalar backends: exact rational arithmetic, tolerant float signs, parsing."""

from fractions import Fraction

import pytest

from niep3.errors import BackendMismatch, ParseError
from niep3.scalars import DEFAULT_PRECISION, RATIONAL, FloatBackend, Scalar


class TestRationalBackend:
    def test_exact_arithmetic(self):
        x = RATIONAL.scalar("7/5")
        y = RATIONAL.scalar("19/20")
        assert (x + y).as_fraction() == Fraction(47, 20)
        assert (x - y).as_fraction() == Fraction(9, 20)
        assert (x * y).as_fraction() == Fraction(133, 100)
        assert (x / y).as_fraction() == Fraction(28, 19)
        assert (x**3).as_fraction() == Fraction(343, 125)

    def test_int_mixing(self):
        x = RATIONAL.scalar(Fraction(1, 3))
        assert (3 * x).as_fraction() == 1
        assert (x + 1).as_fraction() == Fraction(4, 3)
        assert (1 - x).as_fraction() == Fraction(2, 3)
        assert (2 / x).as_fraction() == 6
        assert x == Fraction(1, 3)
        assert x < 1
        assert x > 0

    def test_negation_and_abs(self):
        x = RATIONAL.scalar("-3/7")
        assert (-x).as_fraction() == Fraction(3, 7)
        assert abs(x).as_fraction() == Fraction(3, 7)

    def test_sign_queries_are_exact(self):
        tiny = RATIONAL.scalar(Fraction(1, 10**80))
        assert tiny.is_positive()
        assert tiny.is_nonneg()
        assert not tiny.is_zero()
        assert not (-tiny).is_nonneg()
        assert RATIONAL.zero().is_nonneg()
        assert not RATIONAL.zero().is_positive()

    def test_parse_literals(self):
        assert RATIONAL.parse("7/5").as_fraction() == Fraction(7, 5)
        assert RATIONAL.parse("1.4").as_fraction() == Fraction(7, 5)
        assert RATIONAL.parse("33").as_fraction() == 33
        assert RATIONAL.parse("-0.035").as_fraction() == Fraction(-7, 200)
        with pytest.raises(ParseError):
            RATIONAL.parse("seven")

    def test_hex_round_trip(self):
        x = RATIONAL.scalar("-355/113")
        assert x.hex() == "-355/113"
        assert RATIONAL.parse(x.hex()) == x


class TestFloatBackend:
    def test_precision_floor(self):
        with pytest.raises(ValueError):
            FloatBackend(32)

    def test_arithmetic_precision_survives(self):
        be = FloatBackend(256)
        third = be.from_fraction(Fraction(1, 3))
        # 53-bit contamination would show up well above 2^-200
        err = abs(3 * third - 1)
        assert err < be.from_fraction(Fraction(1, 2**250))

    def test_negation_keeps_precision(self):
        be = FloatBackend(256)
        x = be.from_fraction(Fraction(1, 3))
        assert (-(-x)) == x
        assert abs(-x) == x
        assert ((-x) + x).is_zero()

    def test_tolerant_signs(self):
        be = FloatBackend(256)
        eps = be.eps()
        assert (-eps / 2).is_nonneg()  # within tolerance
        assert not (-2 * eps).is_nonneg()
        assert not (eps / 2).is_positive()  # too close to zero to call
        assert (2 * eps).is_positive()

    def test_parse_rational_and_hex(self):
        be = FloatBackend(128)
        x = be.parse("7/5")
        assert abs(x - be.from_fraction(Fraction(7, 5))).is_zero()
        h = x.hex()
        assert h.startswith("0x") or h.startswith("-0x")
        assert be.parse(h) == x

    def test_hex_round_trip_exact(self):
        be = FloatBackend(256)
        x = be.from_fraction(Fraction(-22, 7))
        assert be.parse(x.hex()) == x
        assert be.parse(be.zero().hex()).is_zero()

    def test_promotes_rational_scalars(self):
        be = FloatBackend(128)
        x = be.scalar(RATIONAL.scalar("3/2"))
        assert x.backend is be
        assert x == be.from_fraction(Fraction(3, 2))

    def test_as_fraction_is_exact(self):
        be = FloatBackend(96)
        x = be.from_fraction(Fraction(1, 3))
        # the float is not 1/3, but converting back to Fraction is lossless
        y = be.from_fraction(x.as_fraction())
        assert x == y

    def test_transcendentals(self):
        be = FloatBackend(256)
        blur = be.from_fraction(Fraction(1, 2**250))  # a few ulps of rounding
        assert abs(be.cos_pi(Fraction(1, 3)) - Fraction(1, 2)) < blur
        assert abs(be.sin_pi(Fraction(1, 2)) - 1) < blur
        two = be.from_fraction(Fraction(2))
        assert abs(be.sqrt(two) * be.sqrt(two) - two) < blur
        assert abs(be.root(two, 3) ** 3 - two) < blur


class TestBackendIsolation:
    def test_mixed_backend_arithmetic_rejected(self):
        x = RATIONAL.scalar(1)
        y = FloatBackend(64).one()
        with pytest.raises(BackendMismatch):
            x + y
        with pytest.raises(BackendMismatch):
            y * x
        with pytest.raises(BackendMismatch):
            x < y

    def test_mixed_float_precisions_rejected(self):
        y = FloatBackend(64).one()
        with pytest.raises(BackendMismatch):
            FloatBackend(128).one() + y

    def test_equal_precision_backends_interoperate(self):
        a = FloatBackend(128).one()
        b = FloatBackend(128).one()
        assert (a + b) == 2

    def test_rational_scalar_rejects_float_value(self):
        y = FloatBackend(64).one()
        with pytest.raises(BackendMismatch):
            RATIONAL.scalar(y)

    def test_default_precision(self):
        assert DEFAULT_PRECISION == 256


def test_scalar_repr_mentions_value():
    assert "7/5" in repr(RATIONAL.scalar("7/5"))


def test_scalar_is_hashable():
    s = {RATIONAL.scalar("1/2"), RATIONAL.scalar(Fraction(1, 2))}
    assert len(s) == 1
