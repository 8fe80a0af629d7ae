import math

import numpy as np
import pytest

from diamondfield.bogoliubov import (
    ab_coefficients,
    ab_numeric,
    completeness_check,
    fit_temperature,
    planck_occupation,
    thermal_occupation,
)
from diamondfield.errors import DomainError
from diamondfield.geometry import DiamondScale


class TestCoefficients:
    @pytest.mark.parametrize("Omega,kappa", [(0.5, 0.7), (1.0, 1.5), (2.0, 0.4), (3.0, 3.0)])
    def test_closed_form_vs_quadrature(self, Omega, kappa):
        A, B = ab_coefficients(Omega, kappa)
        An, Bn, est = ab_numeric(Omega, kappa)
        assert abs(A - An) <= 1e-8 * abs(A) + 10 * est
        assert abs(B - Bn) <= 1e-8 * abs(B) + 10 * est

    def test_shifted_diamond_phase(self):
        # coefficients of diamond n differ only by e^{+-4 i n kappa}
        kappa = 1.3
        A0, B0 = ab_coefficients(1.0, kappa, n=0)
        A2, B2 = ab_coefficients(1.0, kappa, n=2)
        assert abs(A2 - np.exp(8j * kappa) * A0) < 1e-13
        assert abs(B2 - np.exp(-8j * kappa) * B0) < 1e-13

    def test_shifted_quadrature_consistent(self):
        A, B = ab_coefficients(1.0, 0.9, n=1)
        An, Bn, est = ab_numeric(1.0, 0.9, n=1)
        assert abs(A - An) <= 1e-8 * abs(A) + 10 * est

    def test_vectorized_over_k(self):
        ks = np.array([0.5, 1.0, 2.0])
        A, B = ab_coefficients(1.0, ks)
        assert A.shape == (3,)
        A1, _ = ab_coefficients(1.0, 1.0)
        assert abs(A[1] - A1) < 1e-14

    def test_scale_units(self):
        # A, B carry units of 1/a; arguments are absolute
        A1, _ = ab_coefficients(1.0, 1.5, scale=DiamondScale(1.0))
        A2, _ = ab_coefficients(2.0, 3.0, scale=DiamondScale(2.0))
        assert abs(A2 - A1 / 2.0) < 1e-14

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            ab_coefficients(-1.0, 1.0)
        with pytest.raises(DomainError):
            ab_coefficients(1.0, 0.0)


class TestSpectrum:
    def test_occupation_matches_planck(self):
        res = thermal_occupation(1.0, 0.02)
        ref = planck_occupation(1.0, 0.02)
        assert abs(res.value - ref) <= 0.02 * ref
        assert res.est_error < 0.02 * ref
        # the log-uniform tail carries most of the integral for sigma = 0.02
        assert res.tail_part > 0.5 * res.value

    def test_occupation_position_invariance(self):
        # packet center shifts within the diamond only rephase the packet
        base = thermal_occupation(1.0, 0.02)
        res = thermal_occupation(1.0, 0.02, v0=0.5)
        assert abs(res.value - base.value) <= 1e-3 * base.value

    def test_completeness(self):
        res = completeness_check(1.0, 0.02)
        assert abs(res.value - 1.0) <= 0.01

    def test_kappa_split_guard(self):
        with pytest.raises(DomainError):
            thermal_occupation(1.0, 0.02, kappa_split=10.0)

    def test_fit_temperature_exact_planck(self):
        om = np.array([0.5, 1.0, 2.0])
        occ = 1.0 / np.expm1(2.0 * math.pi * om)
        T = fit_temperature(om, occ)
        assert abs(T - 1.0 / (2.0 * math.pi)) < 1e-12

    def test_fit_temperature_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            fit_temperature([1.0], [0.0])
