"""Chebyshev polynomials of the first kind: evaluation, series, decay fits.

Series follow the halved-first-term convention throughout: a coefficient
vector ``a_0 .. a_N`` represents ``a_0/2 + sum_{m>=1} a_m T_m(x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.fft import dct

from .config import COEFF_ENVELOPE_BLOCK, COEFF_NOISE_REL

# Three-term recurrence below this degree, cosine form above.  The recurrence
# is cheap and exact for low degrees; the cosine form stays stable up to
# degrees of 1e6 and beyond.
_RECURRENCE_MAX_DEGREE = 64


def _check_domain(x: np.ndarray) -> None:
    if np.any(np.abs(x) > 1.0):
        raise ValueError("argument outside [-1, 1]")


def chebyshev_t(m: int, x):
    """T_m(x) for x in [-1, 1], scalar or array.

    Raises ValueError for negative degree or |x| > 1.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    xa = np.asarray(x, dtype=float)
    _check_domain(xa)
    if m == 0:
        out = np.ones_like(xa)
    elif m <= _RECURRENCE_MAX_DEGREE:
        prev = np.ones_like(xa)
        cur = xa.copy()
        for _ in range(m - 1):
            prev, cur = cur, 2.0 * xa * cur - prev
        out = cur
    else:
        out = np.cos(m * np.arccos(xa))
    return out if isinstance(x, np.ndarray) else float(out)


def chebyshev_t_integral(m: int) -> float:
    """Integral of T_m over [-1, 1]: 0 for odd m, 2/(1 - m^2) for even m."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m % 2 == 1:
        return 0.0
    return 2.0 / (1.0 - m * m)


@dataclass(frozen=True)
class ChebSeries:
    """Coefficients a_0..a_N of a truncated expansion, first term halved."""

    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def evaluate(self, x):
        """Clenshaw backward recurrence for a_0/2 + sum a_m T_m(x)."""
        xa = np.asarray(x, dtype=float)
        _check_domain(xa)
        a = self.coeffs
        b1 = np.zeros_like(xa)
        b2 = np.zeros_like(xa)
        for k in range(a.size - 1, 0, -1):
            b1, b2 = a[k] + 2.0 * xa * b1 - b2, b1
        out = 0.5 * a[0] + xa * b1 - b2
        return out if isinstance(x, np.ndarray) else float(out)

    def integral(self) -> float:
        """Exact integral over [-1, 1] of the represented function."""
        a = self.coeffs
        total = a[0]  # a_0/2 times the integral 2 of T_0
        for m in range(2, a.size, 2):
            total += a[m] * (2.0 / (1.0 - m * m))
        return float(total)


def lobatto_points(n: int) -> np.ndarray:
    """The n+1 points cos(k*pi/n), k = 0..n, descending and exactly symmetric."""
    if n < 1:
        raise ValueError("need at least two points")
    half = np.cos(np.arange(n // 2 + 1) * (math.pi / n))
    if n % 2 == 0:
        half[-1] = 0.0
        return np.concatenate([half, -half[-2::-1]])
    return np.concatenate([half, -half[::-1]])


def chebyshev_coefficients(f: Callable, n: int) -> ChebSeries:
    """Coefficients of the degree-n interpolant of f at the points cos(k*pi/n).

    Computed by a type-I discrete cosine transform of the samples; exact (up
    to rounding) whenever f is a polynomial of degree <= n.
    """
    if n < 1:
        raise ValueError("interpolation degree must be at least 1")
    x = lobatto_points(n)
    samples = np.asarray(f(x), dtype=float)
    if samples.shape != x.shape:
        samples = np.array([f(float(v)) for v in x], dtype=float)
    coeffs = dct(samples, type=1) / n
    coeffs[n] *= 0.5  # fold the boundary coefficient into the single-halved convention
    return ChebSeries(coeffs)


def _envelope_points(ms: np.ndarray, vals: np.ndarray, block: int):
    """Per-block (of `block` consecutive entries) argmax of vals."""
    keep_m, keep_v = [], []
    for start in range(0, ms.size, block):
        chunk = slice(start, min(start + block, ms.size))
        i = int(np.argmax(vals[chunk])) + start
        keep_m.append(ms[i])
        keep_v.append(vals[i])
    return np.asarray(keep_m, dtype=float), np.asarray(keep_v)


def decay_exponent(series: ChebSeries, m_min: int, m_max: int) -> float:
    """Estimate s from the decay |a_m| ~ m^-(s+1) of even-index coefficients.

    Fits a line to log|a_m| against log m over the upper envelope (local maxima
    per block of 16 consecutive even indices); returns -slope - 1.  Raises
    ValueError when fewer than 4 envelope points survive the noise cut.
    """
    if not (2 <= m_min < m_max <= series.degree):
        raise ValueError("need 2 <= m_min < m_max <= series degree")
    a = series.coeffs
    ms = np.arange(m_min + m_min % 2, m_max + 1, 2)
    vals = np.abs(a[ms])
    floor = COEFF_NOISE_REL * np.max(np.abs(a))
    ok = vals > floor
    ms, vals = ms[ok], vals[ok]
    env_m, env_v = _envelope_points(ms, vals, COEFF_ENVELOPE_BLOCK) if ms.size else (ms, vals)
    if env_m.size < 4:
        raise ValueError("fewer than 4 envelope points above the noise floor")
    slope = np.polyfit(np.log(env_m), np.log(env_v), 1)[0]
    return float(-slope - 1.0)
