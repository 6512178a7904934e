import math

import numpy as np
import pytest

from chebquad.chebyshev import ChebSeries


@pytest.fixture
def abs_x_series():
    """Closed-form Chebyshev coefficients of |x|: a_0 = 4/pi and
    a_{2k} = (4/pi)(-1)^(k+1)/(4k^2-1); odd coefficients vanish."""

    def build(size: int) -> ChebSeries:
        a = np.zeros(size)
        a[0] = 4.0 / math.pi
        for k in range(1, (size - 1) // 2 + 1):
            a[2 * k] = (4.0 / math.pi) * (-1.0) ** (k + 1) / (4.0 * k * k - 1.0)
        return ChebSeries(a)

    return build


@pytest.fixture
def simpson():
    """Composite Simpson oracle on a uniform grid (count must be odd)."""

    def integrate(f, count: int = 100_001) -> float:
        x = np.linspace(-1.0, 1.0, count)
        y = f(x)
        h = x[1] - x[0]
        return float(h / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum()))

    return integrate
