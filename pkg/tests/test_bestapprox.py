import math

import numpy as np
import pytest
from numpy.polynomial import chebyshev as npcheb

from chebquad.bestapprox import RemezError, minimax_error, minimax_error_even, minimax_sweep
from chebquad.chebyshev import chebyshev_t
from chebquad.rates import fit_rate


class TestMinimaxError:
    def test_basis_element_one_degree_down(self):
        result = minimax_error(lambda x: chebyshev_t(5, x), 4)
        assert result.error == pytest.approx(1.0, abs=1e-10)

    def test_x_squared_by_line(self):
        result = minimax_error(lambda x: x * x, 1)
        assert result.error == pytest.approx(0.5, abs=1e-12)

    def test_exactly_representable(self):
        assert minimax_error(lambda x: x**3, 3).error <= 1e-10
        assert minimax_error(lambda x: x**3, 5).error <= 1e-10

    def test_quadratic_on_abs(self):
        # best quadratic for |x| is x^2 + 1/8, levelled at 1/8; the corner
        # extremum limits golden-section accuracy to ~1e-9 at 30 steps
        result = minimax_error(np.abs, 2)
        assert result.error == pytest.approx(0.125, abs=2e-9)

    def test_bernstein_window_at_degree_64(self):
        result = minimax_error(np.abs, 64)
        assert 0.27 <= 64.0 * result.error <= 0.29

    def test_scaled_errors_increase_toward_limit(self):
        scaled = [d * minimax_error(np.abs, d).error for d in (2, 4, 8, 16)]
        assert all(b > a for a, b in zip(scaled, scaled[1:]))
        assert all(v < 0.2802 for v in scaled)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            minimax_error(np.abs, -1)
        with pytest.raises(ValueError):
            minimax_error(np.abs, 4, tol=1e-15)


class TestEquioscillation:
    def test_reference_alternates_with_equal_magnitudes(self):
        tol = 1e-10
        result = minimax_error(np.exp, 5, tol=tol)
        assert result.reference.size == 7
        assert np.all(np.diff(result.reference) > 0)
        resid = np.exp(result.reference) - npcheb.chebval(result.reference, result.coefficients)
        signs = np.sign(resid)
        assert np.all(signs[:-1] * signs[1:] == -1.0)
        assert np.max(np.abs(np.abs(resid) - result.error)) <= 10 * tol * result.error

    def test_optimality_sandwich(self):
        # no polynomial of the same degree beats the reported error
        degree, tol = 5, 1e-10
        result = minimax_error(np.exp, degree, tol=tol)
        grid = np.linspace(-1.0, 1.0, 2001)
        target = np.exp(grid)
        rng = np.random.default_rng(99)
        for _ in range(50):
            coeffs = result.coefficients + rng.normal(scale=1e-3, size=degree + 1)
            assert np.max(np.abs(target - npcheb.chebval(grid, coeffs))) >= result.error - tol

    def test_even_function_kills_odd_coefficients(self):
        result = minimax_error(np.abs, 8)
        assert np.max(np.abs(result.coefficients[1::2])) <= 1e-8


class TestEvenReduction:
    def test_matches_general_path(self):
        full = minimax_error(np.abs, 16)
        even = minimax_error_even(np.abs, 16)
        assert even.error == pytest.approx(full.error, abs=5e-9)
        assert even.degree == 16

    def test_rejects_odd_degree(self):
        with pytest.raises(ValueError):
            minimax_error_even(np.abs, 7)


class TestMinimaxSweep:
    def test_abs_x_rate_is_one_power(self):
        sw = minimax_sweep(np.abs, [8, 12, 16, 24, 32, 48, 64, 91, 128], function_id="abs")
        fit = fit_rate(sw)
        assert fit.slope == pytest.approx(-1.0, abs=0.1)

    def test_half_power_rate(self):
        sw = minimax_sweep(lambda x: np.abs(x - 0.3) ** 0.5, [8, 12, 16, 24, 32, 48, 64, 91, 128])
        fit = fit_rate(sw)
        assert fit.slope == pytest.approx(-0.5, abs=0.15)

    def test_exactly_representable_cubic(self):
        sw = minimax_sweep(lambda x: x**3, [3, 5, 7])
        assert all(err <= 1e-10 for _, err in sw.points)

    def test_rejects_unsorted_degrees(self):
        with pytest.raises(ValueError):
            minimax_sweep(np.abs, [8, 8, 16])
