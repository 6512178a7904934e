"""Minimax polynomial approximation by multi-point Remez exchange.

Each iteration solves the levelled interpolation system on the current
reference, brackets the zeros of the residual between reference points, and
replaces the reference by the per-interval extrema (found by sampling plus
golden-section refinement).  Signs alternate by construction, so the exchange
is the standard second Remez algorithm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from .config import REMEZ_GOLDEN_STEPS, REMEZ_GRID_FACTOR, REMEZ_MAX_ITER
from .rates import ErrorSweep

_GOLD = (math.sqrt(5.0) - 1.0) / 2.0


class RemezError(RuntimeError):
    """Exchange failed: singular reference system or no convergence."""


@dataclass(frozen=True)
class MinimaxResult:
    degree: int
    error: float                 # max |f - p| over [-1, 1]
    reference: np.ndarray        # equioscillation points, strictly increasing
    iterations: int
    coefficients: np.ndarray     # Chebyshev-basis coefficients of p

    def __post_init__(self):
        for name in ("reference", "coefficients"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def _values(f: Callable, x: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(x), dtype=float)
    if vals.shape != x.shape:
        vals = np.array([f(float(v)) for v in x], dtype=float)
    return vals


def _solve_levelled(fr: np.ndarray, ref: np.ndarray, degree: int):
    """Coefficients c and level h with p(ref_j) + (-1)^j h = f(ref_j)."""
    system = np.hstack([npcheb.chebvander(ref, degree), ((-1.0) ** np.arange(ref.size))[:, None]])
    try:
        sol = np.linalg.solve(system, fr)
    except np.linalg.LinAlgError as exc:
        raise RemezError("singular reference system") from exc
    return sol[:-1], float(sol[-1])


def _bracket_zeros(resid: Callable, ref: np.ndarray) -> np.ndarray:
    """One residual zero between consecutive reference points, by bisection."""
    lo = ref[:-1].copy()
    hi = ref[1:].copy()
    flo = _values(resid, lo)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fmid = _values(resid, mid)
        left = flo * fmid > 0.0
        lo = np.where(left, mid, lo)
        flo = np.where(left, fmid, flo)
        hi = np.where(left, hi, mid)
    return 0.5 * (lo + hi)


def _interval_maxima(resid: Callable, edges: np.ndarray, signs: np.ndarray, samples: int):
    """Per-interval maximum of sign * residual: coarse sampling, then golden."""
    count = edges.size - 1
    ts = np.linspace(0.0, 1.0, samples)
    grid = edges[:-1, None] + np.outer(edges[1:] - edges[:-1], ts)
    vals = signs[:, None] * _values(resid, grid.ravel()).reshape(count, samples)
    best = np.argmax(vals, axis=1)
    rows = np.arange(count)
    lo = grid[rows, np.maximum(best - 1, 0)]
    hi = grid[rows, np.minimum(best + 1, samples - 1)]
    x1 = hi - _GOLD * (hi - lo)
    x2 = lo + _GOLD * (hi - lo)
    g1 = signs * _values(resid, x1)
    g2 = signs * _values(resid, x2)
    for _ in range(REMEZ_GOLDEN_STEPS):
        right = g1 < g2
        lo = np.where(right, x1, lo)
        hi = np.where(right, hi, x2)
        x1 = hi - _GOLD * (hi - lo)
        x2 = lo + _GOLD * (hi - lo)
        g1 = signs * _values(resid, x1)
        g2 = signs * _values(resid, x2)
    pick = g1 >= g2
    xstar = np.where(pick, x1, x2)
    rstar = np.where(pick, g1, g2) * signs
    # keep the sampled point when refinement did not improve on it
    coarse = vals[rows, best]
    worse = np.abs(rstar) < coarse
    xstar = np.where(worse, grid[rows, best], xstar)
    rstar = np.where(worse, coarse * signs, rstar)
    return xstar, rstar


def minimax_error(f: Callable, degree: int, tol: float = 1e-10) -> MinimaxResult:
    """Best-approximation error of f by polynomials of the given degree.

    Runs the multi-point exchange from the degree+2 Chebyshev extrema points
    and stops once max|residual| - |h| <= tol * max|residual| (h being the
    levelled error of the reference system), or once max|residual| falls to
    tol * scale for an exactly representable f.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if tol < 1e-13:
        raise ValueError("tolerance below double-precision resolution")
    ref = -np.cos(np.arange(degree + 2) * (math.pi / (degree + 1)))
    samples = max(REMEZ_GRID_FACTOR, 8)
    fscale = float(np.max(np.abs(_values(f, ref)))) or 1.0

    for iteration in range(1, REMEZ_MAX_ITER + 1):
        coeffs, h = _solve_levelled(_values(f, ref), ref, degree)
        resid = lambda x: _values(f, np.asarray(x, dtype=float)) - npcheb.chebval(x, coeffs)

        zeros = _bracket_zeros(resid, ref)
        edges = np.concatenate([[-1.0], zeros, [1.0]])
        signs = np.where(_values(resid, ref) >= 0.0, 1.0, -1.0)
        xstar, rstar = _interval_maxima(resid, edges, signs, samples)

        maxr = float(np.max(np.abs(rstar)))
        if maxr <= tol * fscale or maxr - abs(h) <= tol * maxr:
            order = np.argsort(xstar)
            return MinimaxResult(degree, maxr, xstar[order], iteration, coeffs)
        ref = np.sort(xstar)
    raise RemezError(f"no convergence after {REMEZ_MAX_ITER} iterations")


def minimax_error_even(f: Callable, degree: int, tol: float = 1e-10) -> MinimaxResult:
    """Cross-check path for even f: solve the reduced problem in u = 2x^2 - 1.

    An even function has an even best approximation, so the degree-2d problem
    collapses to a degree-d one on [-1, 1] in the substituted variable.  The
    returned reference holds the nonnegative-x preimages of the reduced
    reference (degree//2 + 2 points, not degree + 2).
    """
    if degree % 2 != 0:
        raise ValueError("even-reduction path needs an even degree")
    reduced = minimax_error(lambda u: f(np.sqrt(0.5 * (1.0 + np.asarray(u)))), degree // 2, tol)
    x_ref = np.sqrt(0.5 * (1.0 + reduced.reference))
    return MinimaxResult(degree, reduced.error, x_ref, reduced.iterations, reduced.coefficients)


def minimax_sweep(f: Callable, degrees: Sequence[int], tol: float = 1e-10, function_id: str = "f") -> ErrorSweep:
    """Minimax errors over ascending degrees, packaged like an error sweep."""
    degrees = list(degrees)
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degrees must be strictly ascending")
    points = [(d, minimax_error(f, d, tol).error) for d in degrees]
    return ErrorSweep(family="best", function_id=function_id, points=points)
