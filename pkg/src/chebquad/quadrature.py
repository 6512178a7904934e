"""n-point Clenshaw-Curtis and Gauss-Legendre rules on [-1, 1].

Clenshaw-Curtis nodes are the cosine-spaced points cos((k-1)pi/(n-1)) with
the unique interpolatory weights (exact through degree n-1).  Gauss-Legendre
nodes are the Legendre zeros, located by Newton iteration from an asymptotic
angle estimate, with weights 2 / ((1 - x^2) P_n'(x)^2) (exact through degree
2n-1).  Both rules are built with exact node/weight symmetry.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import chebyshev
from .config import NEWTON_MAX_ITER, NEWTON_RESIDUAL_TOL, NEWTON_STEP_TOL


class Family(enum.Enum):
    CLENSHAW_CURTIS = "cc"
    GAUSS_LEGENDRE = "gauss"


class EstimateOrder(enum.Enum):
    """Accuracy tier of the asymptotic angle estimate for a Legendre zero."""

    LEADING = "leading"
    FIRST_CORRECTION = "first"
    REFINED_CORRECTION = "refined"


@dataclass(frozen=True)
class GaussNodeEstimate:
    k: int
    phi: float            # (4k - 1) pi / (4n + 2)
    theta: float          # phi plus the order's cotangent correction
    order: EstimateOrder


@dataclass(frozen=True)
class QuadratureRule:
    family: Family
    n: int
    nodes: np.ndarray     # strictly decreasing in [-1, 1]
    weights: np.ndarray   # positive, symmetric
    thetas: np.ndarray    # arccos(nodes), strictly increasing

    def __post_init__(self):
        for name in ("nodes", "weights", "thetas"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.nodes.size != self.n or self.weights.size != self.n:
            raise ValueError("node/weight count does not match n")
        if np.any(np.diff(self.nodes) >= 0):
            raise ValueError("nodes must be strictly decreasing")
        if np.any(self.weights <= 0):
            raise ValueError("weights must be positive")
        if abs(float(np.sum(self.weights)) - 2.0) > 1e-13 * self.n:
            raise ValueError("weights do not sum to 2")


def clenshaw_curtis(n: int) -> QuadratureRule:
    """The n-point Clenshaw-Curtis rule (n >= 2; endpoints included)."""
    if n < 2:
        raise ValueError("Clenshaw-Curtis needs n >= 2")
    big_n = n - 1
    thetas = np.arange(n) * (math.pi / big_n)
    half = (n + 1) // 2  # indices k = 0 .. half-1 have angles in [0, pi/2]
    mirror = slice(n - half - 1, None, -1) if n > half else slice(0, 0)
    nodes_half = np.cos(thetas[:half])
    if n % 2 == 1:
        nodes_half[-1] = 0.0
    nodes = np.concatenate([nodes_half, -nodes_half[mirror]])

    # w_k = c_k (2/N) sum'' over even m of cos(m theta_k) * integral(T_m),
    # the exact integral of the cosine-series form of the cardinal function.
    ms = np.arange(0, big_n + 1, 2)
    mu = 2.0 / (1.0 - ms.astype(float) ** 2)
    scale = np.ones_like(mu)
    scale[0] = 0.5
    if big_n % 2 == 0:
        scale[-1] = 0.5
    w_half = (2.0 / big_n) * np.cos(np.outer(thetas[:half], ms)) @ (mu * scale)
    w_half[0] *= 0.5  # endpoint cardinal function is halved
    weights = np.concatenate([w_half, w_half[mirror]])
    return QuadratureRule(Family.CLENSHAW_CURTIS, n, nodes, weights, thetas)


def _legendre_pair(n: int, x: np.ndarray):
    """P_n(x) and P_n'(x) by the three-term recurrence, x strictly inside (-1, 1)."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for k in range(1, n):
        p_prev, p = p, ((2 * k + 1) * x * p - k * p_prev) / (k + 1)
    dp = n * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def _refined_thetas(n: int, ks: np.ndarray) -> np.ndarray:
    phi = (4.0 * ks - 1.0) * math.pi / (4.0 * n + 2.0)
    return phi + 0.5 / np.tan(phi) / (2.0 * n + 1.0) ** 2


class NewtonConvergenceError(RuntimeError):
    """Newton refinement of a Legendre zero failed to converge."""


def gauss_legendre(n: int) -> QuadratureRule:
    """The n-point Gauss-Legendre rule (n >= 1)."""
    if n < 1:
        raise ValueError("Gauss-Legendre needs n >= 1")
    half = n // 2
    ks = np.arange(1, half + 1, dtype=float)
    x = np.cos(_refined_thetas(n, ks))

    converged = np.zeros(half, dtype=bool)
    for _ in range(NEWTON_MAX_ITER):
        p, dp = _legendre_pair(n, x)
        converged |= np.abs(p) <= NEWTON_RESIDUAL_TOL
        if converged.all():
            break
        step = np.where(converged, 0.0, p / dp)
        x = x - step
        converged |= np.abs(step) <= NEWTON_STEP_TOL
        if converged.all():
            break
    else:
        raise NewtonConvergenceError(f"Legendre zeros for n={n} not converged in {NEWTON_MAX_ITER} iterations")

    _, dp = _legendre_pair(n, x) if half else (None, np.empty(0))
    w_half = 2.0 / ((1.0 - x * x) * dp * dp)
    if n % 2 == 1:
        zeros = np.zeros(1)
        _, dp0 = _legendre_pair(n, zeros)
        nodes = np.concatenate([x, zeros, -x[::-1]])
        weights = np.concatenate([w_half, 2.0 / (dp0 * dp0), w_half[::-1]])
    else:
        nodes = np.concatenate([x, -x[::-1]])
        weights = np.concatenate([w_half, w_half[::-1]])

    theta_half = np.arccos(x)
    if n % 2 == 1:
        thetas = np.concatenate([theta_half, [0.5 * math.pi], math.pi - theta_half[::-1]])
    else:
        thetas = np.concatenate([theta_half, math.pi - theta_half[::-1]])
    return QuadratureRule(Family.GAUSS_LEGENDRE, n, nodes, weights, thetas)


def node_angle_estimate(n: int, k: int, order: EstimateOrder) -> GaussNodeEstimate:
    """Asymptotic angle of the k-th Legendre zero (1 <= k <= n/2).

    LEADING is the bare angle phi_k = (4k-1)pi/(4n+2); FIRST_CORRECTION adds
    cot(phi_k)/(8 n^2); REFINED_CORRECTION adds cot(phi_k)/(2 (2n+1)^2), which
    carries a remainder smaller by one extra power of k.
    """
    if not 1 <= k <= n / 2:
        raise ValueError("node index must satisfy 1 <= k <= n/2")
    phi = (4.0 * k - 1.0) * math.pi / (4.0 * n + 2.0)
    if order is EstimateOrder.LEADING:
        theta = phi
    elif order is EstimateOrder.FIRST_CORRECTION:
        theta = phi + 0.125 / math.tan(phi) / n**2
    elif order is EstimateOrder.REFINED_CORRECTION:
        theta = phi + 0.5 / math.tan(phi) / (2 * n + 1) ** 2
    else:
        raise ValueError(f"unknown order {order!r}")
    return GaussNodeEstimate(k=k, phi=phi, theta=theta, order=order)


@lru_cache(maxsize=None)
def make_rule(family: Family, n: int) -> QuadratureRule:
    """Cached rule factory; rules are immutable and safe to share."""
    if family is Family.CLENSHAW_CURTIS:
        return clenshaw_curtis(n)
    if family is Family.GAUSS_LEGENDRE:
        return gauss_legendre(n)
    raise ValueError(f"unknown family {family!r}")


def _values_at(f: Callable, x: np.ndarray) -> np.ndarray:
    vals = f(x)
    arr = np.asarray(vals, dtype=float)
    if arr.shape != x.shape:
        arr = np.array([f(float(v)) for v in x], dtype=float)
    return arr


def apply_rule(rule: QuadratureRule, f: Callable) -> float:
    """Sum of w_k f(x_k), accumulated in ascending node index.

    math.fsum makes the result independent of grouping, so repeated runs are
    bit-identical.
    """
    vals = _values_at(f, rule.nodes)
    return math.fsum(rule.weights * vals)


def apply_to_chebyshev_t(rule: QuadratureRule, m: int) -> float:
    """The rule applied to T_m, evaluated through the node angles.

    Clenshaw-Curtis node angles are exact rational multiples of pi, so the
    argument m*theta_k is reduced modulo 2*pi in integer arithmetic; that
    avoids the O(m*eps) growth a huge cosine argument would otherwise incur.
    Gauss rules use the cached arccos angles directly.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if rule.family is Family.CLENSHAW_CURTIS:
        big_n = rule.n - 1
        q = (m * np.arange(rule.n, dtype=np.int64)) % (2 * big_n)
        vals = np.cos(q * (math.pi / big_n))
    else:
        vals = np.cos(m * rule.thetas)
    return math.fsum(rule.weights * vals)


def quad_error(rule: QuadratureRule, f: Callable, exact: float) -> float:
    """Quadrature error with the convention error = integral - quadrature."""
    return exact - apply_rule(rule, f)


def clenshaw_curtis_integral(f: Callable, n: int) -> float:
    """I_n for Clenshaw-Curtis without forming weights: integrate the interpolant.

    Equal to apply_rule(clenshaw_curtis(n), f) up to rounding; O(n log n), which
    makes dense sweeps over every n affordable.
    """
    if n < 2:
        raise ValueError("Clenshaw-Curtis needs n >= 2")
    return chebyshev.chebyshev_coefficients(f, n - 1).integral()


def rule_to_csv(rule: QuadratureRule) -> str:
    """CSV rendering with header index,node,weight and 17 significant digits."""
    lines = ["index,node,weight"]
    for k in range(rule.n):
        lines.append(f"{k + 1},{rule.nodes[k]:.17g},{rule.weights[k]:.17g}")
    return "\n".join(lines) + "\n"
