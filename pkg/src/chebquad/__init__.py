"""Clenshaw-Curtis and Gauss-Legendre quadrature with Chebyshev-expansion
machinery, closed-form aliasing errors, convergence-rate experiments, and a
Remez solver for minimax reference values."""

from .aliasing import (
    AliasDecomposition,
    alias_table,
    alias_table_csv,
    cc_alias_decompose,
    cc_error_chebyshev,
    gauss_alias_decompose,
    gauss_error_model,
    gauss_model_residual,
    measured_error_chebyshev,
)
from .bestapprox import MinimaxResult, RemezError, minimax_error, minimax_error_even, minimax_sweep
from .chebyshev import (
    ChebSeries,
    chebyshev_coefficients,
    chebyshev_t,
    chebyshev_t_integral,
    decay_exponent,
    lobatto_points,
)
from .quadrature import (
    EstimateOrder,
    Family,
    GaussNodeEstimate,
    NewtonConvergenceError,
    QuadratureRule,
    apply_rule,
    apply_to_chebyshev_t,
    clenshaw_curtis,
    clenshaw_curtis_integral,
    gauss_legendre,
    make_rule,
    node_angle_estimate,
    quad_error,
    rule_to_csv,
)
from .rates import (
    ErrorSweep,
    RateFit,
    RatioSeries,
    error_bound_check,
    fit_rate,
    ratio_series,
    sweep,
    sweep_csv,
)
from .testfns import (
    TestFunction,
    abs_power,
    abs_power_integral,
    abs_power_value,
    coefficient_asymptotic,
    parse_function_id,
    quadratic_spline,
    variation_coeff_bound,
    variation_error_bound,
)

__version__ = "0.1.0"
