"""Acceptance suite: every stated criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion PASS/FAIL lines while the run is green).
"""

import math
import time

import numpy as np
import pytest

from chebquad.aliasing import (
    cc_error_chebyshev,
    gauss_error_model,
    gauss_model_residual,
    measured_error_chebyshev,
)
from chebquad.bestapprox import minimax_error, minimax_sweep
from chebquad.config import ACCEPTANCE_GRID
from chebquad.quadrature import EstimateOrder, Family, make_rule, node_angle_estimate
from chebquad.rates import error_bound_check, fit_rate, sweep
from chebquad.testfns import abs_power, variation_coeff_bound

XI = 0.3
GRID = ACCEPTANCE_GRID.values()  # geometric, 16 .. 2048


def report(number: int, ok: bool, detail: str) -> None:
    print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


@pytest.fixture(scope="module")
def cc_sweeps():
    start = time.perf_counter()
    fits = {}
    for s in (0.5, 1.0, 1.5, 2.5):
        sw = sweep(Family.CLENSHAW_CURTIS, abs_power(s, XI), GRID)
        fits[s] = fit_rate(sw, use_envelope=True)
    return fits, time.perf_counter() - start


@pytest.fixture(scope="module")
def gauss_sweeps():
    start = time.perf_counter()
    fits = {}
    for s in (0.5, 1.5, 2.5):
        sw = sweep(Family.GAUSS_LEGENDRE, abs_power(s, XI), GRID)
        fits[s] = fit_rate(sw, use_envelope=True)
    return fits, time.perf_counter() - start


def test_criterion_01_cc_rate_theorem(cc_sweeps):
    fits, elapsed = cc_sweeps
    devs = {s: abs(fit.slope + s + 1.0) for s, fit in fits.items()}
    slopes = [fits[s].slope for s in (0.5, 1.5, 2.5)]
    ordered = all(b < a for a, b in zip(slopes, slopes[1:]))
    ok = all(d <= 0.15 for d in devs.values()) and ordered and elapsed < 60.0
    detail = (
        "CC envelope slopes "
        + ", ".join(f"s={s:g}: {fits[s].slope:+.3f}" for s in sorted(fits))
        + f" (tol 0.15, ordered={ordered}, {elapsed:.1f}s < 60s)"
    )
    report(1, ok, detail)


def test_criterion_02_gauss_rate_s_above_two(gauss_sweeps):
    fits, elapsed = gauss_sweeps
    dev = abs(fits[2.5].slope + 3.5)
    ok = dev <= 0.15 and elapsed < 120.0
    report(2, ok, f"Gauss slope s=2.5: {fits[2.5].slope:+.3f} vs -3.5 (tol 0.15, {elapsed:.1f}s < 120s)")


def test_criterion_03_gauss_conjecture_window(gauss_sweeps):
    fits, _ = gauss_sweeps
    ok = True
    parts = []
    for s in (0.5, 1.5):
        slope = fits[s].slope
        dev = abs(slope + s + 1.0)
        fallback = -1.5 * s  # the proven rate; the fit must beat it
        ok = ok and dev <= 0.2 and slope < fallback
        parts.append(f"s={s:g}: {slope:+.3f} (dev {dev:.3f} <= 0.2, < {fallback:+.2f})")
    report(3, ok, "Gauss " + "; ".join(parts))


def test_criterion_04_exact_cc_aliasing():
    worst = 0.0
    for n in (4, 10, 33, 128, 512):
        rule = make_rule(Family.CLENSHAW_CURTIS, n)
        for m in range(0, 16 * n + 1, 2):
            gap = abs(cc_error_chebyshev(n, m) - measured_error_chebyshev(rule, m))
            worst = max(worst, gap)
    report(4, worst <= 1e-12, f"max |closed-form - measured| = {worst:.3g} <= 1e-12")


def test_criterion_05_gauss_model_window():
    n = 200
    worst = max(
        abs(gauss_model_residual(n, m)) for m in range(2 * n, int(n**1.4) + 1, 2)
    )
    residuals = [abs(gauss_model_residual(nn, 4 * nn + 10)) for nn in (50, 100, 200, 400)]
    decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))
    ok = worst <= 0.1 and decreasing
    report(
        5,
        ok,
        f"max |measured - model| = {worst:.3g} <= 0.1 for n=200, m in [400, {int(200**1.4)}]; "
        f"residuals at (j,r)=(1,4) {['%.2e' % r for r in residuals]} strictly decreasing: {decreasing}",
    )


def test_criterion_06_uniform_gauss_bound():
    rng = np.random.default_rng(20260810)
    worst = 0.0
    n = 200
    for m in range(2 * n, int(n**1.4) + 1, 2):
        worst = max(worst, abs(measured_error_chebyshev(make_rule(Family.GAUSS_LEGENDRE, n), m)))
    for nn in (50, 100, 200, 400):
        rule = make_rule(Family.GAUSS_LEGENDRE, nn)
        worst = max(worst, abs(measured_error_chebyshev(rule, 4 * nn + 10)))
        for m in 2 * rng.integers(nn, 25 * nn, size=200):
            worst = max(worst, abs(measured_error_chebyshev(rule, int(m))))
    report(6, worst <= 4.0, f"max |E(T_m)| = {worst:.4f} <= 4 over the model grid plus 200 random m per n")


def test_criterion_07_bernstein_constant():
    start = time.perf_counter()
    scaled = 64.0 * minimax_error(np.abs, 64).error
    elapsed = time.perf_counter() - start
    ok = 0.27 <= scaled <= 0.29 and elapsed < 30.0
    report(7, ok, f"64 * E_64(|x|) = {scaled:.6f} in [0.27, 0.29] ({elapsed:.1f}s < 30s)")


def test_criterion_08_one_power_gap(cc_sweeps):
    fits, _ = cc_sweeps
    sw = minimax_sweep(lambda x: np.abs(x - XI), [8, 12, 16, 24, 32, 48, 64, 91, 128])
    minimax_fit = fit_rate(sw)
    cc_slope = fits[1.0].slope
    ok = abs(minimax_fit.slope + 1.0) <= 0.1 and abs(cc_slope + 2.0) <= 0.15
    report(
        8,
        ok,
        f"minimax slope {minimax_fit.slope:+.3f} (vs -1, tol 0.1); "
        f"CC quadrature slope {cc_slope:+.3f} (vs -2, tol 0.15)",
    )


def test_criterion_09_explicit_bounds(abs_x_series):
    series = abs_x_series(10_001)
    coeff_ok = all(
        abs(series.coeffs[m]) <= variation_coeff_bound(1, 2.0, m) for m in range(2, 10_001, 2)
    )
    bound_report = error_bound_check(Family.CLENSHAW_CURTIS, abs_power(1.0, 0.0), range(10, 2049))
    ok = coeff_ok and bound_report.all_hold
    report(
        9,
        ok,
        f"coefficient bound holds for even m in [2, 1e4]: {coeff_ok}; "
        f"CC error bound holds for all n in [10, 2048]: {bound_report.all_hold}",
    )


def test_criterion_10_gatteschi_scaling():
    maxima = {}
    refined_beats_first = True
    for n in (50, 100, 200, 400):
        rule = make_rule(Family.GAUSS_LEGENDRE, n)
        scaled = []
        for k in range(1, n // 2 + 1):
            theta_true = rule.thetas[k - 1]
            first = abs(node_angle_estimate(n, k, EstimateOrder.FIRST_CORRECTION).theta - theta_true)
            refined = abs(node_angle_estimate(n, k, EstimateOrder.REFINED_CORRECTION).theta - theta_true)
            scaled.append(k * k * n * first)
            if k in (1, 2, 5, 10):
                refined_beats_first = refined_beats_first and refined < first
        maxima[n] = max(scaled)
    spread = max(maxima.values()) / min(maxima.values())
    ok = spread < 8.0 and refined_beats_first
    report(
        10,
        ok,
        f"k^2 n residual maxima spread factor {spread:.3f} < 8; "
        f"refined < first correction at fixed k: {refined_beats_first}",
    )
