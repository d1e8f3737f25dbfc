"""Exact and numeric computation of degenerate hypergeometric functions and numbers."""

from .bell import bell_deg, bell_deg_bivariate
from .core import falling_lambda, lambda_binomial, rising_lambda
from .errors import (
    DegenerateError,
    DomainError,
    EndpointSingularity,
    LowerParamPole,
    NoConvergence,
    NonRationalPower,
    NonTerminating,
    NonTerminatingExact,
    NonzeroInnerConstant,
    OrderExceeded,
    PoleOnPath,
    UnsupportedM,
)
from .hypergeometric import (
    EXACT,
    NUMERIC,
    EvalMode,
    HyperParams,
    central_sum_deg,
    euler_integral_deg,
    gamma_real,
    gauss_value_deg,
    hyper_deg_general,
)
from .hypernumbers import (
    Family,
    NumberQuery,
    alt_power_sum,
    apostol_H,
    apostol_T,
    evaluate,
    golombek_B_deg,
    h_bell_form,
    h_double_sum,
    h_low_closed,
    h_p_series,
    h_stirling_form,
    lambda_hyper_H,
    lambda_hyper_T,
    t1_closed,
)
from .series import GF, TruncatedSeries, compose, deg_exp_series, egf_coefficient, gf_extract_family
from .stirling import apostol_s2, s1_classical, s1_deg, s2_classical, s2_deg

__version__ = "0.1.0"
