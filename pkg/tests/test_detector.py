import math

import numpy as np
import pytest

from diamondfield.detector import (
    accelerated_wightman,
    detailed_balance,
    expected_rate,
    fit_temperature,
    identity_residual,
    response_rate,
    scaled_static_wightman,
    thermal_wightman,
    wightman_minkowski,
)
from diamondfield.errors import DomainError
from diamondfield.geometry import DiamondScale


class TestWightman:
    def test_minkowski_timelike(self):
        val = wightman_minkowski(2.0, 0.0)
        assert abs(val + 1.0 / (16.0 * math.pi**2)) < 1e-15

    def test_minkowski_eps_moves_singularity(self):
        val = wightman_minkowski(0.0, 0.0, eps=1e-3)
        assert np.isfinite(val)

    def test_identity_grid(self):
        res = identity_residual(np.linspace(-3.0, 3.0, 20))
        assert res <= 1e-10

    def test_identity_other_scale(self):
        res = identity_residual(np.linspace(-1.0, 1.0, 20) / 3.0, scale=DiamondScale(3.0))
        assert res <= 1e-10

    def test_forms_agree_pointwise(self):
        lhs = scaled_static_wightman(0.7, -0.4)
        mid = accelerated_wightman(0.7, -0.4)
        ref = thermal_wightman(1.1)
        assert abs(lhs - ref) < 1e-12 * abs(ref)
        assert abs(mid - ref) < 1e-12 * abs(ref)

    def test_thermal_antiperiodicity_modulus(self):
        # |W(d)| = |W(-d)| and period 2 pi i / a in imaginary time
        d = 0.9
        assert abs(abs(thermal_wightman(d)) - abs(thermal_wightman(-d))) < 1e-16
        shifted = thermal_wightman(d - 2j * math.pi)
        assert abs(shifted - thermal_wightman(d)) < 1e-12 * abs(shifted)


class TestResponse:
    @pytest.mark.parametrize("E", [0.5, 1.0, 2.0])
    def test_rate_matches_thermal(self, E):
        res = response_rate(E)
        assert abs(res.value - expected_rate(E)) <= 0.02 * expected_rate(E)

    @pytest.mark.parametrize("E", [0.5, 1.0, 2.0])
    def test_detailed_balance(self, E):
        ratio, expected = detailed_balance(E)
        assert abs(ratio - expected) <= 0.02 * expected

    def test_eps_halving_stable(self):
        r1 = response_rate(1.0, eps=1e-8).value
        r2 = response_rate(1.0, eps=5e-9).value
        assert abs(r1 - r2) <= 0.02 * abs(r1)

    def test_deexcitation_dominates(self):
        assert response_rate(-1.0).value > response_rate(1.0).value

    def test_scale_invariance_in_units_of_a(self):
        # rate per unit a*eta depends only on E/a
        r1 = response_rate(1.0, scale=DiamondScale(1.0)).value
        r2 = response_rate(3.0, scale=DiamondScale(3.0)).value
        assert abs(r1 - r2) <= 1e-10 * abs(r1)

    def test_window_must_be_positive(self):
        with pytest.raises(DomainError):
            response_rate(1.0, window_time=0.0)

    def test_fit_temperature(self):
        Es = [0.5, 1.0, 2.0]
        rates = [[response_rate(E).value, response_rate(-E).value] for E in Es]
        T = fit_temperature(Es, rates)
        assert abs(T - 1.0 / (2.0 * math.pi)) <= 0.02 / (2.0 * math.pi)

    def test_fit_temperature_shape_contract(self):
        with pytest.raises(DomainError):
            fit_temperature([1.0], [1.0, 2.0, 3.0])
