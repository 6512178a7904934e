"""Integrand families with closed-form integrals and coefficient bounds.

The workhorse family is |x - xi|^s, whose Chebyshev coefficients decay like
m^(-s-1) with an oscillating T_m(xi) phase.  Functions carrying an integer
smoothness order k and the total variation of their k-th derivative also get
the explicit coefficient and quadrature-error bounds checked by the rates
module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .chebyshev import chebyshev_t

# Amplitude factor of the leading coefficient asymptotic for |x - xi|^s.
# "1-xi^2" is the stationary-phase value sin(arccos xi)^s = (1-xi^2)^(s/2);
# "1-xi" is the (1-xi)^(s/2) variant.  The interpolation oracle at xi = 0.3
# (tests/test_testfns.py) matches "1-xi^2" to about 1 percent over envelope
# indices up to 2^12 while "1-xi" is off by 9 (s=0.5) to 22 (s=1.5) percent,
# so "1-xi^2" is the default; both stay selectable.
AMPLITUDE_VARIANTS = ("1-xi^2", "1-xi")
DEFAULT_AMPLITUDE = "1-xi^2"


@dataclass(frozen=True)
class TestFunction:
    """An integrand on [-1, 1] with its exact integral and regularity data."""

    __test__ = False  # not a pytest case, despite the name

    id: str
    kind: str                      # "abs_pow" or "custom"
    fn: Callable
    exact_integral: float
    s: Optional[float] = None
    xi: Optional[float] = None
    smoothness: Optional[int] = None     # order k of the piecewise-BV derivative
    variation: Optional[float] = None    # total variation of that derivative

    def __post_init__(self):
        if self.variation is not None and self.smoothness is None:
            raise ValueError("variation requires a smoothness order")
        if not math.isfinite(self.exact_integral):
            raise ValueError("exact integral must be finite")


def abs_power_value(s: float, xi: float, x):
    """|x - xi|^s, elementwise for arrays."""
    if isinstance(x, np.ndarray):
        return np.abs(x - xi) ** s
    return abs(x - xi) ** s


def abs_power_integral(s: float, xi: float) -> float:
    """Integral of |x - xi|^s over [-1, 1] for s > 0 and xi inside (-1, 1)."""
    if s <= 0:
        raise ValueError("exponent must be positive")
    if not -1.0 < xi < 1.0:
        raise ValueError("singularity must lie inside (-1, 1)")
    return ((1.0 - xi) ** (s + 1.0) + (1.0 + xi) ** (s + 1.0)) / (s + 1.0)


def abs_power(s: float, xi: float) -> TestFunction:
    """The integrand |x - xi|^s.

    Odd integer s gets smoothness data attached: the s-th derivative jumps by
    2 * s! at xi, so k = s and the variation is 2 * s!.  Non-integer and even
    integer exponents carry no bound data (the bounds need integer
    smoothness; even powers are plain polynomials).
    """
    integral = abs_power_integral(s, xi)
    smoothness = variation = None
    if float(s).is_integer() and int(s) % 2 == 1:
        smoothness = int(s)
        variation = 2.0 * math.factorial(int(s))
    return TestFunction(
        id=f"abs_pow:s={s:g},xi={xi:g}",
        kind="abs_pow",
        fn=lambda x, s=s, xi=xi: np.abs(np.asarray(x, dtype=float) - xi) ** s,
        exact_integral=integral,
        s=float(s),
        xi=float(xi),
        smoothness=smoothness,
        variation=variation,
    )


def quadratic_spline(xi: float) -> TestFunction:
    """The C^1 hinge ((x - xi)_+)^2: k = 2 with second-derivative jump 2."""
    if not -1.0 < xi < 1.0:
        raise ValueError("knot must lie inside (-1, 1)")
    return TestFunction(
        id=f"quad_spline:xi={xi:g}",
        kind="custom",
        fn=lambda x, xi=xi: np.maximum(np.asarray(x, dtype=float) - xi, 0.0) ** 2,
        exact_integral=(1.0 - xi) ** 3 / 3.0,
        xi=float(xi),
        smoothness=2,
        variation=2.0,
    )


def coefficient_asymptotic(s: float, xi: float, m: int, amplitude: str = DEFAULT_AMPLITUDE) -> float:
    """Leading term of the degree-m Chebyshev coefficient of |x - xi|^s:

        -(4/pi) T_m(xi) A Gamma(1+s) sin(pi s / 2) m^(-s-1)

    with amplitude A = (1-xi^2)^(s/2) or (1-xi)^(s/2) per the selected
    variant.  Rejects even integer s, where sin(pi s / 2) kills the leading
    term and the model says nothing.
    """
    if m < 2:
        raise ValueError("asymptotic needs m >= 2")
    if s <= 0:
        raise ValueError("exponent must be positive")
    if float(s).is_integer() and int(s) % 2 == 0:
        raise ValueError("leading term vanishes for even integer exponents")
    if amplitude not in AMPLITUDE_VARIANTS:
        raise ValueError(f"amplitude must be one of {AMPLITUDE_VARIANTS}")
    amp = (1.0 - xi * xi) ** (s / 2.0) if amplitude == "1-xi^2" else (1.0 - xi) ** (s / 2.0)
    return -(4.0 / math.pi) * chebyshev_t(m, xi) * amp * math.gamma(1.0 + s) * math.sin(math.pi * s / 2.0) * float(m) ** (-s - 1.0)


def falling_factorial(a: int, count: int) -> float:
    """a (a-1) ... (a-count+1), the falling product with `count` factors."""
    out = 1.0
    for i in range(count):
        out *= a - i
    return out


def variation_coeff_bound(k: int, variation: float, m: int) -> float:
    """Coefficient bound 2V / (pi m(m-1)...(m-k)) for k-smooth functions."""
    if k < 1 or variation <= 0:
        raise ValueError("need k >= 1 and positive variation")
    if m <= k:
        raise ValueError("bound needs m >= k + 1")
    return 2.0 * variation / (math.pi * falling_factorial(m, k + 1))


def variation_error_bound(k: int, variation: float, n: int) -> float:
    """Quadrature-error bound pi V / (2 n(n-1)...(n-k)); for Gauss rules the
    bound is asserted only for k >= 2 (enforced by the caller)."""
    if k < 1 or variation <= 0:
        raise ValueError("need k >= 1 and positive variation")
    if n <= k:
        raise ValueError("bound needs n >= k + 1")
    return math.pi * variation / (2.0 * falling_factorial(n, k + 1))


def parse_function_id(text: str) -> TestFunction:
    """Build a registered TestFunction from an id like "abs_pow:s=0.5,xi=0.3".

    The format is name:key=value[,key=value...]; unknown names, unknown keys,
    missing keys, and malformed numbers are all rejected.
    """
    name, sep, payload = text.partition(":")
    if not sep:
        raise ValueError(f"malformed function id {text!r}: expected name:key=value,...")
    params: dict[str, float] = {}
    for item in payload.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ValueError(f"malformed parameter {item!r} in {text!r}")
        if key in params:
            raise ValueError(f"duplicate parameter {key!r} in {text!r}")
        try:
            params[key] = float(value)
        except ValueError as exc:
            raise ValueError(f"non-numeric value for {key!r} in {text!r}") from exc
    if name == "abs_pow":
        if set(params) != {"s", "xi"}:
            raise ValueError("abs_pow takes exactly the parameters s and xi")
        return abs_power(params["s"], params["xi"])
    if name == "quad_spline":
        if set(params) != {"xi"}:
            raise ValueError("quad_spline takes exactly the parameter xi")
        return quadratic_spline(params["xi"])
    raise ValueError(f"unknown function family {name!r} (known: abs_pow, quad_spline)")
