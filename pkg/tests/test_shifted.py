"""Mean-shifted companion construction: goldens, feasibility, diagnostics."""

import random
from fractions import Fraction

import pytest

from helpers import random_fraction
from niep3.errors import BadDimension, InfeasibleCandidate, NotRealizable
from niep3.poly import poly_shift
from niep3.results import Method, NotFoundUpToCap
from niep3.scalars import RATIONAL, FloatBackend
from niep3.shifted import (
    _shifted_from_cubic,
    find_min_shifted_companion,
    prop3_p4_diagnostic,
    shifted_power_sums,
    try_shifted_companion,
)
from niep3.spectrum import (
    Spectrum3,
    check_n3_companion,
    minimal_zeros_nonpositive_a,
    power_sums,
)
from niep3.verify import verify_realization

R = RATIONAL


def random_spectrum(rng):
    a = random_fraction(rng)
    b = random_fraction(rng)
    while b == 0:
        b = random_fraction(rng)
    rho = abs(a) + abs(b) + Fraction(rng.randint(1, 5), rng.randint(1, 3))
    return Spectrum3.of(R, rho, a, a * a + b * b)


class TestGoldens:
    def test_sextic_for_5_2_3i(self):
        sigma = Spectrum3.from_real_imag(R, 5, 2, 3)
        outcome = find_min_shifted_companion(sigma)
        assert outcome.found and outcome.zeros_added == 3
        candidate = try_shifted_companion(sigma, 3)
        assert candidate.alpha == Fraction(3, 2)
        assert [c.as_fraction() for c in candidate.shifted_poly.coeffs] == [
            Fraction(-6993, 64),
            Fraction(-351, 2),
            Fraction(-1197, 16),
            Fraction(-2),
            Fraction(-3, 4),
            Fraction(0),
            Fraction(1),
        ]
        assert verify_realization(candidate.matrix(), sigma).ok

    def test_quintic_for_21_8_12i(self):
        sigma = Spectrum3.from_real_imag(R, 21, 8, 12)
        outcome = find_min_shifted_companion(sigma)
        assert outcome.found and outcome.zeros_added == 2
        candidate = try_shifted_companion(sigma, 2)
        assert candidate.alpha == Fraction(37, 5)
        assert [c.as_fraction() for c in candidate.shifted_poly.coeffs] == [
            Fraction(-335969028, 3125),
            Fraction(-2532243, 125),
            Fraction(-9892, 25),
            Fraction(-18, 5),
            Fraction(0),
            Fraction(1),
        ]
        assert verify_realization(candidate.matrix(), sigma).ok

    def test_found_result_shape(self):
        sigma = Spectrum3.from_real_imag(R, 5, 2, 3)
        outcome = find_min_shifted_companion(sigma)
        assert outcome.method is Method.SHIFTED_COMPANION
        assert outcome.dim == 6
        assert outcome.margin is not None and outcome.margin.is_nonneg()
        assert outcome.certificate.ok


class TestFeasibility:
    def test_binomial_shift_matches_generic_shift(self):
        rng = random.Random(20260822)
        for _ in range(40):
            sigma = random_spectrum(rng)
            N = rng.randint(0, 25)
            alpha = sigma.s1 / (N + 3)
            fast = _shifted_from_cubic(sigma, N, alpha)
            slow = poly_shift(sigma.char_cubic().shift_degree(N), alpha)
            assert fast == slow

    def test_zero_padding_matches_3x3_test_when_trace_allows(self):
        rng = random.Random(7)
        seen_both = set()
        for _ in range(300):
            sigma = random_spectrum(rng)
            if not sigma.s1.is_nonneg():
                continue
            candidate = try_shifted_companion(sigma, 0)
            assert candidate.feasible == check_n3_companion(sigma).holds
            seen_both.add(candidate.feasible)
        assert seen_both == {True, False}

    def test_negative_trace_blocks_the_3x3_even_when_coeffs_pass(self):
        # all shifted coefficients are nonpositive here, but the shift itself
        # is negative, so the diagonal would be negative: infeasible
        sigma = Spectrum3.of(R, 1, Fraction(-9, 10), Fraction(9, 10))
        assert check_n3_companion(sigma).holds
        assert not sigma.s1.is_nonneg()
        candidate = try_shifted_companion(sigma, 0)
        assert not candidate.feasible
        assert candidate.first_positive_coeff_index is None
        with pytest.raises(InfeasibleCandidate):
            candidate.matrix()

    def test_one_zero_feasibility_is_rho_vs_twice_re(self):
        rng = random.Random(11)
        hits = 0
        while hits < 60:
            sigma = random_spectrum(rng)
            s = power_sums(sigma, 2)
            if not s.s(1).is_nonneg():
                continue
            if (4 * s.s(2) - s.s(1) * s.s(1)).is_positive() is False:
                continue
            hits += 1
            expected = (sigma.rho - 2 * sigma.a).is_nonneg()
            assert try_shifted_companion(sigma, 1).feasible == expected

    def test_one_zero_needs_the_second_moment_too(self):
        # rho >= 2a holds but 4*s_2 < s_1^2, so the 4x4 shift cannot work
        sigma = Spectrum3.from_real_imag(R, 21, 8, 12)
        assert (sigma.rho - 2 * sigma.a).is_nonneg()
        s = power_sums(sigma, 2)
        assert (4 * s.s(2) - s.s(1) * s.s(1)).as_fraction() == -245
        candidate = try_shifted_companion(sigma, 1)
        assert not candidate.feasible
        assert candidate.first_positive_coeff_index == 2

    def test_shifted_cube_s3_identity_everywhere(self):
        rng = random.Random(13)
        for _ in range(50):
            sigma = random_spectrum(rng)
            s3 = shifted_power_sums(sigma, 4, 3).s(3)
            b2 = sigma.modsq - sigma.a * sigma.a
            closed = (
                Fraction(3, 8)
                * (sigma.rho - 2 * sigma.a)
                * (sigma.rho * sigma.rho + 4 * b2)
            )
            assert s3 == closed

    def test_nonpositive_re_minimum_matches_closed_form(self):
        rng = random.Random(17)
        checked = 0
        while checked < 40:
            sigma = random_spectrum(rng)
            if sigma.a.is_positive():
                continue
            try:
                expected = minimal_zeros_nonpositive_a(sigma)
            except NotRealizable:
                miss = find_min_shifted_companion(sigma, 12)
                assert not miss.found
                checked += 1
                continue
            outcome = find_min_shifted_companion(sigma)
            assert outcome.found and outcome.zeros_added == expected
            checked += 1


class TestDegreeFourCoefficient:
    def test_matches_both_closed_forms(self):
        rng = random.Random(19)
        for _ in range(20):
            sigma = random_spectrum(rng)
            N = rng.randint(4, 30)
            p4, check = prop3_p4_diagnostic(sigma, N)
            assert p4 == -check / 4
            s = shifted_power_sums(sigma, N, 4)
            assert p4 == -(s.s(4) - s.s(2) * s.s(2) / 2) / 4

    def test_sign_tracks_rho_vs_twice_re(self):
        # rho < 2*re: the fourth coefficient is eventually positive, killing
        # every large dimension; rho > 2*re keeps it nonpositive
        near = Spectrum3.of(R, Fraction(7, 5), Fraction(19, 20), 1)
        p4, _ = prop3_p4_diagnostic(near, 100)
        assert p4.is_positive()
        wide = Spectrum3.from_real_imag(R, 5, 2, 3)
        p4, _ = prop3_p4_diagnostic(wide, 10)
        assert not p4.is_positive()

    def test_small_dimension_rejected(self):
        sigma = Spectrum3.from_real_imag(R, 5, 2, 3)
        with pytest.raises(BadDimension):
            prop3_p4_diagnostic(sigma, 3)


class TestSearch:
    def test_near_boundary_spectrum_misses_small_caps(self):
        sigma = Spectrum3.of(R, Fraction(7, 5), Fraction(19, 20), 1)
        miss = find_min_shifted_companion(sigma, 30)
        assert isinstance(miss, NotFoundUpToCap)
        assert miss.cap == 30 and len(miss.diagnostics) == 31
        assert all(d.detail for d in miss.diagnostics)
        assert any("turns positive" in note for note in miss.notes)

    def test_negative_dimension_rejected(self):
        sigma = Spectrum3.from_real_imag(R, 5, 2, 3)
        with pytest.raises(BadDimension):
            try_shifted_companion(sigma, -1)

    def test_float_backend_notes_approximation(self):
        be = FloatBackend(128)
        sigma = Spectrum3.of(be, 5, 2, 13)
        outcome = find_min_shifted_companion(sigma)
        assert outcome.found and outcome.zeros_added == 3
        assert any("approximate" in note for note in outcome.notes)
        assert outcome.certificate.ok
