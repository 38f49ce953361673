"""Alternating Kurepa function A(x): exact values, quadrature, sequences and inequality checks."""

from ._core import (
    DomainError,
    PoleError,
    ToleranceNotMet,
    ConvergenceError,
    QuadratureResult,
    alt_factorial,
    beta,
    bounds_ga2,
    bounds_ga3,
    bounds_ga4,
    ei_constant,
    exp_integral_E1,
    find_beta_minimum,
    find_reA_roots,
    functional_equation_residual,
    g_eval,
    gamma,
    gamma_cos,
    im_A,
    limit_scan,
    p_eval,
    p_eval_explicit,
    q_eval,
    q_eval_explicit,
    r_eval,
    r_eval_explicit,
    re_A,
    re_A_decomposed,
    re_A_via_p_theorem,
    re_A_via_r_theorem,
    verify_inequality,
)

__all__ = [name for name in dir() if not name.startswith("_")]
