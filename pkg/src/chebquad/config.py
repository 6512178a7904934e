"""Shared numeric defaults and empirically calibrated tolerances.

Every tunable constant used by more than one module (or by both the library
and the test suite) lives here, so a tolerance can be audited in one place.
"""

from __future__ import annotations

from dataclasses import dataclass

# Points with |error| below this are double-precision artifacts and are
# excluded from rate fits and ratio series.
NOISE_FLOOR = 1e-13

# Sliding-window width (in samples) for picking local maxima of |E_n| before
# a log-log fit; oscillating Gauss errors scatter below their envelope.
ENVELOPE_WINDOW = 5

# Coefficient-envelope block: local maxima of |a_m| are taken over blocks of
# this many consecutive even indices before a decay fit.
COEFF_ENVELOPE_BLOCK = 16

# Coefficients below COEFF_NOISE_REL * max|a_m| are treated as rounding noise.
COEFF_NOISE_REL = 1e-15

# Newton iteration for Legendre zeros.
NEWTON_RESIDUAL_TOL = 1e-15
NEWTON_STEP_TOL = 1e-16
NEWTON_MAX_ITER = 20

# Remez exchange.
REMEZ_GRID_FACTOR = 20   # scan-grid points per reference point
REMEZ_GOLDEN_STEPS = 30  # golden-section refinement depth per extremum
REMEZ_MAX_ITER = 100

# Gauss aliasing-model tolerances.  The remainder terms of the leading-term
# model carry no explicit constants, so these were calibrated by running the
# sweeps in the test suite and recording the observed residuals with margin.
GAUSS_MODEL_WINDOW_TOL = 0.1   # |residual| for even m in [2n, n**1.4] at n = 200
GAUSS_MODEL_POINT_TOL = 0.02   # |residual| at n = 100, m = 408


@dataclass(frozen=True)
class GridSpec:
    """Geometric grid of rule sizes for error sweeps."""

    n_min: int = 16
    n_max: int = 2048
    count: int = 24

    def values(self) -> list[int]:
        """Distinct integer grid points, ascending."""
        if self.n_min < 1 or self.n_max < self.n_min or self.count < 1:
            raise ValueError("invalid grid specification")
        if self.count == 1 or self.n_min == self.n_max:
            return [self.n_min]
        ratio = (self.n_max / self.n_min) ** (1.0 / (self.count - 1))
        raw = [round(self.n_min * ratio**i) for i in range(self.count)]
        raw[-1] = self.n_max
        out: list[int] = []
        for n in raw:
            if not out or n > out[-1]:
                out.append(int(n))
        return out


DEFAULT_GRID = GridSpec()

# Grid used by the acceptance suite: same endpoints as DEFAULT_GRID but dense
# enough that envelope fits always retain the six points they need.
ACCEPTANCE_GRID = GridSpec(n_min=16, n_max=2048, count=32)
