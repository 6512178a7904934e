"""Closed-form and model quadrature errors for Chebyshev polynomials.

On the cosine-spaced Clenshaw-Curtis nodes an undersampled T_m coincides with
a low-degree T_{2|r|}, so the quadrature error is an exact closed form.  On
Gauss-Legendre nodes the analogous statement holds only to leading order; the
Curtis-Rabinowitz model below captures that leading term, and the residual
carries the higher-order remainder.

Decompositions
--------------
Clenshaw-Curtis, n points:   m = 2 j (n-1) + 2r   with -(n-2) <= 2r <= n-1.
The window holds n-1 even offsets, one per even residue class mod 2(n-1),
so (j, r) is unique.

Gauss-Legendre, n points:    m = j (4n+2) + 2r    with -n <= r <= n, j >= 0,
defined for even m >= 2n.  The window holds 2n+1 even offsets {-2n, ..., 2n}
and there are exactly 2n+1 even residue classes mod 4n+2, so the
decomposition is unique including the boundary r = +-n (the offsets -2n and
2n differ by 4n, which is not a multiple of 4n+2, hence they never alias to
the same class).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chebyshev import chebyshev_t_integral
from .quadrature import Family, QuadratureRule, apply_to_chebyshev_t, make_rule


@dataclass(frozen=True)
class AliasDecomposition:
    family: Family
    n: int
    m: int
    j: int
    r: int

    def reconstruct(self) -> int:
        """The degree m implied by (j, r); identity with self.m."""
        if self.family is Family.CLENSHAW_CURTIS:
            return 2 * self.j * (self.n - 1) + 2 * self.r
        return self.j * (4 * self.n + 2) + 2 * self.r


def cc_alias_decompose(n: int, m: int) -> AliasDecomposition:
    """Unique (j, r) with m = 2j(n-1) + 2r and -(n-2) <= 2r <= n-1."""
    if n < 2:
        raise ValueError("Clenshaw-Curtis needs n >= 2")
    if m < 0 or m % 2 != 0:
        raise ValueError("degree must be even and nonnegative")
    period = 2 * (n - 1)
    offset = m % period
    if offset > n - 1:
        offset -= period
    return AliasDecomposition(Family.CLENSHAW_CURTIS, n, m, (m - offset) // period, offset // 2)


def cc_error_chebyshev(n: int, m: int) -> float:
    """Exact n-point Clenshaw-Curtis error for T_m (zero for odd m).

    For even m the aliased degree is 2|r|, so the error is the difference of
    the two exact integrals, -2/(m^2-1) + 2/(4r^2-1); for m <= n-1 the
    decomposition has j = 0 and the difference vanishes (exactness).
    """
    if n < 2:
        raise ValueError("Clenshaw-Curtis needs n >= 2")
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if m % 2 == 1:
        return 0.0
    r = cc_alias_decompose(n, m).r
    return -2.0 / (m * m - 1.0) + 2.0 / (4.0 * r * r - 1.0)


def gauss_alias_decompose(n: int, m: int) -> AliasDecomposition:
    """Unique (j, r) with m = j(4n+2) + 2r and |r| <= n, for even m >= 2n."""
    if n < 1:
        raise ValueError("Gauss-Legendre needs n >= 1")
    if m % 2 != 0:
        raise ValueError("degree must be even")
    if m < 2 * n:
        raise ValueError("decomposition is defined for m >= 2n only")
    period = 4 * n + 2
    offset = m % period
    if offset > 2 * n:
        offset -= period
    return AliasDecomposition(Family.GAUSS_LEGENDRE, n, m, (m - offset) // period, offset // 2)


def gauss_error_model(n: int, m: int) -> float:
    """Leading-term model of the n-point Gauss error for T_m, even m >= 2n.

    (-1)^j * 2/(4r^2-1) for |r| < n and (-1)^j * pi/2 at the boundary
    |r| = n.  Valid asymptotically for m = o(n^(3/2)); beyond that, phase
    errors of order one make the model uninformative.
    """
    dec = gauss_alias_decompose(n, m)
    sign = -1.0 if dec.j % 2 else 1.0
    if abs(dec.r) == n:
        return sign * math.pi / 2.0
    return sign * 2.0 / (4.0 * dec.r * dec.r - 1.0)


def measured_error_chebyshev(rule: QuadratureRule, m: int) -> float:
    """Directly measured quadrature error for T_m (integral minus rule)."""
    return chebyshev_t_integral(m) - apply_to_chebyshev_t(rule, m)


def gauss_model_residual(n: int, m: int) -> float:
    """Measured Gauss error minus the leading-term model."""
    return measured_error_chebyshev(make_rule(Family.GAUSS_LEGENDRE, n), m) - gauss_error_model(n, m)


def alias_table(family: Family, n: int, m_values) -> list[dict]:
    """Rows (m, j, r, measured, model, residual) for the requested degrees.

    Odd degrees integrate to zero by symmetry and are reported as exact
    zeros with no decomposition.  For Gauss degrees below 2n (the exactness
    range) the model is zero and no decomposition is reported either.
    """
    rule = make_rule(family, n)
    rows = []
    for m in m_values:
        m = int(m)
        if m % 2 == 1:
            rows.append({"m": m, "j": None, "r": None, "measured": 0.0, "model": 0.0, "residual": 0.0})
            continue
        measured = measured_error_chebyshev(rule, m)
        if family is Family.CLENSHAW_CURTIS:
            dec = cc_alias_decompose(n, m)
            model = cc_error_chebyshev(n, m)
        elif m >= 2 * n:
            dec = gauss_alias_decompose(n, m)
            model = gauss_error_model(n, m)
        else:
            rows.append({"m": m, "j": None, "r": None, "measured": measured, "model": 0.0, "residual": measured})
            continue
        rows.append({"m": m, "j": dec.j, "r": dec.r, "measured": measured, "model": model, "residual": measured - model})
    return rows


def alias_table_csv(rows: list[dict]) -> str:
    """CSV rendering with header m,j,r,measured,model,residual."""
    lines = ["m,j,r,measured,model,residual"]
    for row in rows:
        j = "" if row["j"] is None else str(row["j"])
        r = "" if row["r"] is None else str(row["r"])
        lines.append(f"{row['m']},{j},{r},{row['measured']:.17g},{row['model']:.17g},{row['residual']:.17g}")
    return "\n".join(lines) + "\n"
