"""Error sweeps over n, log-log rate fits, and bound-check experiments.

Signed errors are stored; magnitudes are taken only at fit and ratio time so
sign-pattern studies stay possible.  Oscillating error sequences (Gauss
especially) are fitted on their upper envelope: the largest magnitude within
each window of consecutive samples, which keeps the fit on the trend the
scattered points hang below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .config import ENVELOPE_WINDOW, NOISE_FLOOR
from .quadrature import Family, clenshaw_curtis_integral, make_rule, quad_error
from .testfns import TestFunction, variation_error_bound


def _family(value) -> Family:
    if isinstance(value, Family):
        return value
    for fam in Family:
        if fam.value == value:
            return fam
    raise ValueError(f"unknown rule family {value!r}")


@dataclass(frozen=True)
class RateFit:
    slope: float
    log_constant: float
    points_used: int

    @property
    def constant(self) -> float:
        return math.exp(self.log_constant)


@dataclass
class ErrorSweep:
    """Signed errors of one rule family applied to one integrand, per n."""

    family: str
    function_id: str
    points: list[tuple[int, float]]
    fit: Optional[RateFit] = None

    def __post_init__(self):
        ns = [n for n, _ in self.points]
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("grid must be strictly increasing")
        if not all(math.isfinite(e) for _, e in self.points):
            raise ValueError("errors must be finite")


def sweep(family, f: TestFunction, n_list: Sequence[int]) -> ErrorSweep:
    """Quadrature errors of the family's n-point rules applied to f."""
    fam = _family(family)
    if not n_list:
        raise ValueError("empty grid")
    points = [(int(n), quad_error(make_rule(fam, int(n)), f.fn, f.exact_integral)) for n in n_list]
    return ErrorSweep(family=fam.value, function_id=f.id, points=points)


def envelope_indices(values: Sequence[float], window: int = ENVELOPE_WINDOW) -> list[int]:
    """Index of the largest magnitude within each window of consecutive samples."""
    out = []
    for start in range(0, len(values), window):
        block = values[start : start + window]
        out.append(start + max(range(len(block)), key=lambda i: abs(block[i])))
    return out


def fit_rate(
    err_sweep: ErrorSweep,
    use_envelope: bool = False,
    window: int = ENVELOPE_WINDOW,
    noise_floor: float = NOISE_FLOOR,
) -> RateFit:
    """Least-squares line through (log n, log |E_n|); attaches and returns it.

    Points at or below the noise floor are dropped first; at least 6 must
    survive.  With use_envelope only the per-window magnitude maxima enter
    the fit.
    """
    ns = np.array([n for n, _ in err_sweep.points], dtype=float)
    errs = np.array([abs(e) for _, e in err_sweep.points])
    keep = errs > noise_floor
    ns, errs = ns[keep], errs[keep]
    if ns.size < 6:
        raise ValueError("fewer than 6 points above the noise floor")
    if use_envelope:
        idx = envelope_indices(list(errs), window)
        ns, errs = ns[idx], errs[idx]
    slope, intercept = np.polyfit(np.log(ns), np.log(errs), 1)
    fit = RateFit(slope=float(slope), log_constant=float(intercept), points_used=int(ns.size))
    err_sweep.fit = fit
    return fit


@dataclass(frozen=True)
class RatioSeries:
    points: list[tuple[int, float]]   # (n, |E_gauss| / |E_cc|) on smoothed magnitudes
    ratio_min: float
    ratio_max: float


def ratio_series(gauss_sweep: ErrorSweep, cc_sweep: ErrorSweep, window: int = ENVELOPE_WINDOW) -> RatioSeries:
    """Observed |Gauss error| / |Clenshaw-Curtis error| along a shared grid.

    Magnitudes are window-max smoothed (centered, width `window`) before
    dividing, so near-zeros at sign changes do not blow the ratio up.  Grid
    points where either smoothed magnitude sits at the noise floor are
    dropped; an all-noise pair is rejected.
    """
    if [n for n, _ in gauss_sweep.points] != [n for n, _ in cc_sweep.points]:
        raise ValueError("sweeps must share one n grid")
    if gauss_sweep.function_id != cc_sweep.function_id:
        raise ValueError("sweeps must target the same function")

    def smoothed(points):
        mags = [abs(e) for _, e in points]
        half = window // 2
        return [max(mags[max(0, i - half) : i + half + 1]) for i in range(len(mags))]

    g, c = smoothed(gauss_sweep.points), smoothed(cc_sweep.points)
    pts = [
        (n, gv / cv)
        for (n, _), gv, cv in zip(gauss_sweep.points, g, c)
        if gv > NOISE_FLOOR and cv > NOISE_FLOOR
    ]
    if not pts:
        raise ValueError("all points at the noise floor; ratios are meaningless")
    ratios = [r for _, r in pts]
    return RatioSeries(points=pts, ratio_min=min(ratios), ratio_max=max(ratios))


@dataclass(frozen=True)
class BoundCheckEntry:
    n: int
    error: float      # |E_n(f)|
    bound: float
    holds: bool


@dataclass(frozen=True)
class BoundCheckReport:
    family: str
    function_id: str
    entries: list[BoundCheckEntry]
    threshold: Optional[int]   # smallest tested n from which the bound holds onward
    all_hold: bool


def error_bound_check(family, f: TestFunction, n_list: Sequence[int]) -> BoundCheckReport:
    """Check |E_n(f)| against the falling-factorial error bound along a grid.

    Needs the function's smoothness order k >= 1 and variation; Gauss rules
    additionally need k >= 2.  Clenshaw-Curtis errors are evaluated through
    the interpolant-integration fast path so dense grids stay cheap.
    """
    fam = _family(family)
    if f.smoothness is None or f.variation is None:
        raise ValueError("function carries no smoothness/variation data")
    if f.smoothness < 1:
        raise ValueError("bound needs smoothness order k >= 1")
    if fam is Family.GAUSS_LEGENDRE and f.smoothness < 2:
        raise ValueError("Gauss bound check needs smoothness order k >= 2")

    entries = []
    for n in n_list:
        n = int(n)
        if fam is Family.CLENSHAW_CURTIS:
            err = abs(f.exact_integral - clenshaw_curtis_integral(f.fn, n))
        else:
            err = abs(quad_error(make_rule(fam, n), f.fn, f.exact_integral))
        bound = variation_error_bound(f.smoothness, f.variation, n)
        entries.append(BoundCheckEntry(n=n, error=err, bound=bound, holds=err <= bound))

    threshold = None
    for entry in reversed(entries):
        if not entry.holds:
            break
        threshold = entry.n
    return BoundCheckReport(
        family=fam.value,
        function_id=f.id,
        entries=entries,
        threshold=threshold,
        all_hold=all(e.holds for e in entries),
    )


def sweep_csv(sweeps: Sequence[ErrorSweep]) -> str:
    """CSV rendering with header family,function,n,error."""
    lines = ["family,function,n,error"]
    for sw in sweeps:
        for n, err in sw.points:
            lines.append(f"{sw.family},{sw.function_id},{n},{err:.17g}")
    return "\n".join(lines) + "\n"


def fit_summary(fit: RateFit) -> str:
    return f"slope={fit.slope:.17g}, constant={fit.constant:.17g}, points_used={fit.points_used}"
