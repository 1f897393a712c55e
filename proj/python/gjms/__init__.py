"""Numerical checks for higher-order conformal operators on odd spheres.

Thin re-export of the compiled core: exact operator constants, the kernel
inversion constant, the perturbed quotient minimizer, the radial integral
equation solver, and randomized inequality suites.
"""

from ._core import (
    chain_suite,
    compute_gamma,
    critical_alpha,
    eigenvalue,
    expand_polynomial,
    expand_polynomial_exact,
    gamma_closed_form,
    log_sobolev_suite,
    minimize_quotient,
    pohozaev,
    q_curvature,
    q_curvature_exact,
    sharp_constant,
    sobolev_suite,
    solve_ie,
    sphere_surface_area,
)

__version__ = "0.1.0"

__all__ = [
    "chain_suite",
    "compute_gamma",
    "critical_alpha",
    "eigenvalue",
    "expand_polynomial",
    "expand_polynomial_exact",
    "gamma_closed_form",
    "log_sobolev_suite",
    "minimize_quotient",
    "pohozaev",
    "q_curvature",
    "q_curvature_exact",
    "sharp_constant",
    "sobolev_suite",
    "solve_ie",
    "sphere_surface_area",
]
