"""Exception types shared across the package.

Every deliberate failure raises a subclass of NiepError so callers can
distinguish usage problems from genuine infeasibility.  Note that a bounded
search hitting its cap is NOT an error: the search functions return a
NotFoundUpToCap result object instead (see results.py).
"""

from __future__ import annotations


class NiepError(Exception):
    """Base class for every error raised on purpose by this package."""


# scalar and polynomial layer

class BackendMismatch(NiepError, TypeError):
    """Arithmetic attempted between scalars of different backends."""


class DivisionByZeroPolynomial(NiepError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class DegreeTooSmall(NiepError, ValueError):
    """Requested reversal length is below the polynomial degree."""


class NotMonic(NiepError, ValueError):
    """An operation requiring a monic polynomial got a non-monic one."""


class BadConstantTerm(NiepError, ValueError):
    """Series root requires constant term exactly 1."""


class NotSquare(NiepError, ValueError):
    """Matrix operation requiring a square matrix got a rectangular one."""


# spectrum and condition checkers

class NonRealRequired(NiepError, ValueError):
    """The conjugate pair degenerates to real numbers (b = 0)."""


class PerronViolated(NiepError, ValueError):
    """rho is not a positive dominant eigenvalue (rho <= 0 or rho^2 < modsq)."""


class NotApplicable(NiepError, ValueError):
    """A criterion invoked outside the hypotheses under which it holds."""


class NotRealizable(NiepError, ValueError):
    """The spectrum fails a trace condition no number of zeros can repair."""


class BadAngle(NiepError, ValueError):
    """Angle-based check needs pi/l with integer l >= 2."""


# realization methods

class InfeasibleCandidate(NiepError, ValueError):
    """Matrix assembly requested for a candidate that is not feasible."""


class BadModulus(NiepError, ValueError):
    """Division ladder modulus is not monic of the expected degree."""


class InfeasibleLayout(NiepError, ValueError):
    """Multi-block assembly requested for an infeasible layout."""


class LadderMismatch(NiepError, ArithmeticError):
    """The final ladder quotient failed to reproduce the modulus."""


class SelfCheckFailed(NiepError, AssertionError):
    """A freshly constructed realization failed its own verification."""


# verification

class BadDimension(NiepError, ValueError):
    """Matrix dimension inconsistent with the verification target."""


class WrongBackend(NiepError, TypeError):
    """Operation restricted to one backend got the other."""


# command line

class ParseError(NiepError, ValueError):
    """A numeric literal or input file could not be parsed."""


class UsageError(NiepError, ValueError):
    """Command line arguments do not form a valid request."""
