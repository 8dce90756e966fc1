"""Spectrum validation, power sums, and the necessary-condition checkers."""

import random
from fractions import Fraction

import pytest

from helpers import random_fraction
from niep3.errors import (
    BackendMismatch,
    BadAngle,
    BadDimension,
    NonRealRequired,
    NotApplicable,
    NotRealizable,
    PerronViolated,
)
from niep3.poly import Polynomial, newton_coeffs_to_powersums
from niep3.scalars import RATIONAL, FloatBackend
from niep3.spectrum import (
    Spectrum3,
    bh_check_rational_angle,
    check_jll,
    check_n3_companion,
    check_rho_ge_2a,
    jll_dimension_lower_bound,
    minimal_jll_dimension,
    minimal_zeros_nonpositive_a,
    power_sums,
)

R = RATIONAL


def random_spectrum(rng):
    """Random rational spectrum honoring the dominance invariant."""
    a = random_fraction(rng)
    b = random_fraction(rng)
    while b == 0:
        b = random_fraction(rng)
    rho = abs(a) + abs(b) + Fraction(rng.randint(1, 5), rng.randint(1, 3))
    return Spectrum3.of(R, rho, a, a * a + b * b)


class TestSpectrum3:
    def test_golden_fields(self):
        s = Spectrum3.from_real_imag(R, 21, 8, 12)
        assert s.modsq == 208
        assert s.b_squared == 144
        assert s.s1 == 37
        assert s.strict_perron()

    def test_real_pair_rejected(self):
        with pytest.raises(NonRealRequired):
            Spectrum3.of(R, 1, 1, 1)
        with pytest.raises(NonRealRequired):
            Spectrum3.from_real_imag(R, 1, "1/2", 0)

    def test_dominance_enforced(self):
        with pytest.raises(PerronViolated):
            Spectrum3.of(R, 1, 2, 13)
        with pytest.raises(PerronViolated):
            Spectrum3.of(R, "-5", 2, 13)

    def test_boundary_modulus_allowed(self):
        s = Spectrum3.of(R, 1, 0, 1)
        assert not s.strict_perron()

    def test_mixed_backends_rejected(self):
        with pytest.raises(BackendMismatch):
            Spectrum3(R.scalar(5), FloatBackend(64).scalar(2), R.scalar(13))

    def test_char_cubic(self):
        s = Spectrum3.of(R, "7/5", "19/20", 1)
        want = Polynomial.of(R, ["-14/10", "366/100", "-33/10", 1])
        assert s.char_cubic() == want

    def test_from_angle_exact(self):
        s = Spectrum3.from_angle(R.scalar(2), Fraction(1, 3))
        assert s.backend is R
        assert s.a == Fraction(1, 2)
        assert s.modsq == 1
        t = Spectrum3.from_angle(R.scalar(2), Fraction(1, 2))
        assert t.a.is_zero()

    def test_from_angle_float(self):
        s = Spectrum3.from_angle(R.scalar("11/10"), Fraction(47, 2500))
        assert isinstance(s.backend, FloatBackend)
        assert s.a < 1
        assert s.a > Fraction(99, 100)
        assert s.strict_perron()

    def test_from_angle_degenerate(self):
        with pytest.raises(NonRealRequired):
            Spectrum3.from_angle(R.scalar(2), Fraction(0))


class TestPowerSums:
    def test_golden_values(self):
        s = power_sums(Spectrum3.of(R, 21, 8, 208), 2)
        assert s.s(1) == 37
        assert s.s(2) == 281
        t = power_sums(Spectrum3.of(R, 5, 2, 13), 2)
        assert t.s(1) == 9
        assert t.s(2) == 15

    def test_pure_imaginary_pair(self):
        s = power_sums(Spectrum3.of(R, 1, 0, 1), 2)
        assert s.s(2) == -1

    def test_matches_newton_identities(self):
        rng = random.Random(20260829)
        for _ in range(30):
            sigma = random_spectrum(rng)
            K = rng.randint(1, 50)
            direct = power_sums(sigma, K)
            via_newton = newton_coeffs_to_powersums(sigma.char_cubic(), K)
            assert direct.values == via_newton.values


class TestJll:
    def test_failure_witness_245(self):
        reports = check_jll(Spectrum3.of(R, 21, 8, 208), n=4)
        (r,) = [r for r in reports if r.name == "moment(k=1, m=2, n=4)"]
        assert not r.holds
        assert r.witness == -245

    def test_dimension_progression(self):
        sigma = Spectrum3.of(R, 5, 2, 13)
        for n, margin in ((4, -21), (5, -6), (6, 9)):
            reports = check_jll(sigma, n=n)
            (r,) = [r for r in reports if r.name.startswith("moment(k=1, m=2")]
            assert r.holds == (margin > 0)
            assert r.witness == margin

    def test_small_spectrum_all_pass(self):
        reports = check_jll(Spectrum3.of(R, 2, 0, 1), n=3, k_max=4, m_max=4)
        assert all(r.holds for r in reports)

    def test_trace_reports_present(self):
        reports = check_jll(Spectrum3.of(R, 5, 2, 13), n=6, k_max=3, m_max=2)
        names = [r.name for r in reports]
        assert "s[1] >= 0" in names and "s[3] >= 0" in names

    def test_dimension_precondition(self):
        with pytest.raises(BadDimension):
            check_jll(Spectrum3.of(R, 5, 2, 13), n=2)

    def test_monotone_in_dimension(self):
        rng = random.Random(20260830)
        for _ in range(10):
            sigma = random_spectrum(rng)
            held = False
            for n in range(3, 12):
                ok = all(r.holds for r in check_jll(sigma, n, 4, 4))
                assert not (held and not ok)  # once it holds, it keeps holding
                held = held or ok

    def test_minimal_dimension(self):
        assert minimal_jll_dimension(Spectrum3.of(R, 5, 2, 13)) == 6
        assert minimal_jll_dimension(Spectrum3.of(R, 2, 0, 1)) == 3


class TestClosedFormChecks:
    def test_n3_holds(self):
        r = check_n3_companion(Spectrum3.of(R, 12, 9, 82))
        assert r.holds
        assert r.witness == 6  # (12-9)^2 - 3*1

    def test_n3_fails_on_narrow_gap(self):
        sigma = Spectrum3.from_angle(R.scalar("11/10"), Fraction(47, 2500))
        assert not check_n3_companion(sigma).holds

    def test_scale_invariance(self):
        rng = random.Random(20260831)
        for _ in range(20):
            sigma = random_spectrum(rng)
            k = Fraction(rng.randint(1, 7), rng.randint(1, 7))
            scaled = Spectrum3.of(R, sigma.rho.as_fraction() * k,
                                  sigma.a.as_fraction() * k,
                                  sigma.modsq.as_fraction() * k * k)
            assert check_n3_companion(sigma).holds == check_n3_companion(scaled).holds

    def test_rho_ge_2a(self):
        assert not check_rho_ge_2a(Spectrum3.of(R, 12, 9, 82)).holds
        boundary = check_rho_ge_2a(Spectrum3.of(R, 4, 2, 5))
        assert boundary.holds
        assert boundary.witness == 0
        assert check_rho_ge_2a(Spectrum3.of(R, 5, 2, 13)).holds


class TestMinimalZeros:
    def test_immediate(self):
        assert minimal_zeros_nonpositive_a(Spectrum3.of(R, 2, -1, 2)) == 0

    def test_six_zeros(self):
        assert minimal_zeros_nonpositive_a(Spectrum3.of(R, 3, 0, 4)) == 6

    def test_positive_a_rejected(self):
        with pytest.raises(NotApplicable):
            minimal_zeros_nonpositive_a(Spectrum3.of(R, 5, "1/10", 1))

    def test_unrealizable_trace(self):
        with pytest.raises(NotRealizable):
            minimal_zeros_nonpositive_a(Spectrum3.of(R, 1, "-51/100", "2602/10000"))

    def test_unrealizable_second_sum(self):
        with pytest.raises(NotRealizable):
            minimal_zeros_nonpositive_a(Spectrum3.of(R, 1, 0, 1))

    def test_unrealizable_zero_second_sum(self):
        with pytest.raises(NotRealizable):
            minimal_zeros_nonpositive_a(Spectrum3.of(R, 2, 0, 2))

    def test_minimality(self):
        sigma = Spectrum3.of(R, 3, 0, 4)
        s = power_sums(sigma, 2)
        n = minimal_zeros_nonpositive_a(sigma)
        assert (n + 3) * s.s(2) >= s.s(1) ** 2
        assert (n + 2) * s.s(2) < s.s(1) ** 2


class TestAngleChecks:
    def test_threshold_sqrt2(self):
        be = FloatBackend(256)
        res = bh_check_rational_angle(R.scalar("3/2"), 2)
        assert res.report.holds
        two = be.scalar(2)
        assert abs(res.rho0 * res.rho0 - two) < be.scalar(Fraction(1, 2**200))

    def test_failure_below_threshold(self):
        res = bh_check_rational_angle(R.scalar("7/5"), 2)
        assert not res.report.holds
        assert res.report.witness == 2  # 1.96 - 2 < 0 at k = 2

    def test_l3(self):
        assert bh_check_rational_angle(R.scalar("13/10"), 3).report.holds

    def test_large_rho(self):
        for l in range(2, 7):
            assert bh_check_rational_angle(R.scalar(10), l).report.holds

    def test_bad_angle(self):
        with pytest.raises(BadAngle):
            bh_check_rational_angle(R.scalar(2), 1)

    def test_dimension_bound(self):
        assert jll_dimension_lower_bound(R.scalar("3/2"), 2) == 9
        assert jll_dimension_lower_bound(R.scalar(2), 2) == 2

    def test_dimension_bound_needs_margin(self):
        rho0 = bh_check_rational_angle(R.scalar("3/2"), 2).rho0
        with pytest.raises(NotApplicable):
            jll_dimension_lower_bound(rho0, 2)
