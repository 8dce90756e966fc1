"""Shared helpers for randomized test suites (deterministic, seeded)."""

from fractions import Fraction

from niep3.poly import Polynomial
from niep3.scalars import RATIONAL


def random_fraction(rng, lo=-9, hi=9, max_den=9):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_poly(rng, degree, monic=False):
    """Random rational polynomial of exactly the given degree."""
    coeffs = [random_fraction(rng) for _ in range(degree + 1)]
    if monic:
        coeffs[-1] = Fraction(1)
    else:
        while coeffs[-1] == 0:
            coeffs[-1] = random_fraction(rng)
    return Polynomial.of(RATIONAL, coeffs)
