"""Numerical toolkit for the Riemann zeta and eta functions built on
generalized exponential integrals at half-odd multiples of pi.

Layers, bottom to top: special (gamma/digamma/Si/Ci/Fresnel), quadrature,
numtheory (exact rational constants), expint (the E-function family),
series (the conjugate-pair eta series and its descendants), paths (complex
contours, the incomplete-zeta split, the critical-line system), asymptotic
(divergent expansions and the vertical-contour odd-zeta route).
"""
from .accel import alternating_sum, alternating_sum_with_estimate, terms_for_tolerance
from .asymptotic import (
    AsymptoticEvaluation,
    digamma_weighted_sine_series,
    divergent_3f0_min_term,
    eta_hurwitz_half_asymptotic,
    eta_hurwitz_half_exact,
    expint_pair_si_identity,
    hyp1f2_reduction,
    hyp1f2_series,
    mellin_barnes_zeta_odd,
    odd_zeta_kernel_integral,
    regularized_3f0,
    si_split_identity,
    truncation_error_slope,
    zeta_odd_via_double_integral,
)
from .errors import (
    ConvergenceError,
    DomainError,
    PathError,
    PoleError,
    TableCapError,
    ZetakitError,
)
from .expint import (
    ExpIntRequest,
    expint_conjugate_pair,
    expint_e,
    expint_negint,
    expint_order_derivative,
    expint_pair_derivative,
    expint_step_up,
    half_odd_pi,
)
from .numtheory import (
    bernoulli,
    bernoulli_from_euler,
    bernoulli_via_even_recursion,
    euler_bernoulli_harmonic_sides,
    euler_gamma_coefficient,
    euler_gamma_ratio_sides,
    euler_harmonic_bernoulli_sides,
    euler_number,
    euler_number_asymptotic,
    euler_number_via_harmonic_recursion,
    euler_polynomial,
    euler_polynomial_coefficients,
    euler_triangle_sum,
    harmonic,
)
from .paths import (
    PATH_KINDS,
    REGISTRY,
    CriticalLineSystem,
    IdentityCase,
    PathSpec,
    RegistryRecord,
    critical_line_system,
    eta_minus,
    eta_plus,
    euler_polynomial_integral,
    half_arc_integral,
    path_circle,
    path_double_circle,
    path_four_lines,
    path_integral_eta,
    path_two_lines,
    registry_ids,
    run_identity_registry,
    sum_expint_halfodd,
    zeta_minus,
    zeta_plus,
)
from .quadrature import (
    QuadratureResult,
    integrate_decaying,
    integrate_oscillatory,
    integrate_real,
    tanh_sinh,
)
from .series import (
    SeriesConfig,
    alternating_half_power_sum,
    eta_from_zeta_ref,
    eta_via_expint_series,
    eta_via_recursed_series,
    gaussian_lattice_constant,
    leclair_xi,
    negative_order_pair_identity,
    paris_zeta,
    zeta_derivative_series,
    zeta_even_closed_form,
    zeta_even_coefficient,
    zeta_half_fresnel,
    zeta_odd_via_exp_tail,
    zeta_odd_via_shifted_tail,
    zeta_ref,
    zeta_via_reflected_tail,
)
from .special import (
    EULER_GAMMA,
    SeriesResult,
    cosine_integral,
    digamma,
    erf_real,
    fresnel_c,
    gamma_complex,
    log_gamma_real,
    polygamma,
    polylog,
    sine_integral,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA",
    "PATH_KINDS",
    "REGISTRY",
    "AsymptoticEvaluation",
    "ConvergenceError",
    "CriticalLineSystem",
    "DomainError",
    "ExpIntRequest",
    "IdentityCase",
    "PathError",
    "PathSpec",
    "PoleError",
    "QuadratureResult",
    "RegistryRecord",
    "SeriesConfig",
    "SeriesResult",
    "TableCapError",
    "ZetakitError",
    "alternating_half_power_sum",
    "alternating_sum",
    "alternating_sum_with_estimate",
    "bernoulli",
    "bernoulli_from_euler",
    "bernoulli_via_even_recursion",
    "cosine_integral",
    "critical_line_system",
    "digamma",
    "digamma_weighted_sine_series",
    "divergent_3f0_min_term",
    "erf_real",
    "eta_from_zeta_ref",
    "eta_hurwitz_half_asymptotic",
    "eta_hurwitz_half_exact",
    "eta_minus",
    "eta_plus",
    "eta_via_expint_series",
    "eta_via_recursed_series",
    "euler_bernoulli_harmonic_sides",
    "euler_gamma_coefficient",
    "euler_gamma_ratio_sides",
    "euler_harmonic_bernoulli_sides",
    "euler_number",
    "euler_number_asymptotic",
    "euler_number_via_harmonic_recursion",
    "euler_polynomial",
    "euler_polynomial_coefficients",
    "euler_polynomial_integral",
    "euler_triangle_sum",
    "expint_conjugate_pair",
    "expint_e",
    "expint_negint",
    "expint_order_derivative",
    "expint_pair_derivative",
    "expint_pair_si_identity",
    "expint_step_up",
    "fresnel_c",
    "gamma_complex",
    "gaussian_lattice_constant",
    "half_arc_integral",
    "half_odd_pi",
    "harmonic",
    "hyp1f2_reduction",
    "hyp1f2_series",
    "integrate_decaying",
    "integrate_oscillatory",
    "integrate_real",
    "leclair_xi",
    "log_gamma_real",
    "mellin_barnes_zeta_odd",
    "negative_order_pair_identity",
    "odd_zeta_kernel_integral",
    "paris_zeta",
    "path_circle",
    "path_double_circle",
    "path_four_lines",
    "path_integral_eta",
    "path_two_lines",
    "polygamma",
    "polylog",
    "regularized_3f0",
    "registry_ids",
    "run_identity_registry",
    "si_split_identity",
    "sine_integral",
    "sum_expint_halfodd",
    "tanh_sinh",
    "terms_for_tolerance",
    "truncation_error_slope",
    "zeta_derivative_series",
    "zeta_even_closed_form",
    "zeta_even_coefficient",
    "zeta_half_fresnel",
    "zeta_minus",
    "zeta_odd_via_double_integral",
    "zeta_odd_via_exp_tail",
    "zeta_odd_via_shifted_tail",
    "zeta_plus",
    "zeta_ref",
    "zeta_via_reflected_tail",
]
