"""Exact degenerate central factorial numbers and the identities relating them."""

from .arith import DomainError, Poly, UsageError, format_rational, parse_rational, poly_eval, poly_mul, rational
from .classical import (
    central_diff,
    central_diff_reduction_check,
    central_factorial_poly,
    central_first_kind,
    central_second_kind,
    stirling1,
    stirling2,
)
from .degenerate import (
    SYMBOLIC,
    SYMBOLIC_X,
    LambdaMode,
    degenerate_euler,
    euler_via_t2,
    lambda_binom,
    lambda_falling,
    stirling2_lambda,
    t1_degenerate,
    t2_even_convolution,
    t2_explicit,
    t2_number,
    t2_poly,
    t2_poly_recursive,
    t2_via_delta,
)
from .series import (
    Series,
    deformed_exp,
    egf_extract,
    series_compose,
    series_int_pow,
    series_mul,
    series_rat_pow,
    series_revert,
)
from .triangle import NumberTriangle, build_triangle
from .verify import IdentityCheck, run_all, run_check

__version__ = "0.1.0"
