"""IMEX BDF3 Fourier pseudo-spectral solver for 2-D incompressible flow."""

from ._bdf3ns import (
    BlowUp,
    ConfigError,
    ContractViolation,
    MeanViolation,
    convergence_study,
    flow_state,
    laplacian,
    run,
    run_invariant_suite,
    shear_layer_init,
    skew_convection,
    solve_poisson,
    taylor_green_exact,
    telescope_coefficients,
)

__all__ = [
    "BlowUp",
    "ConfigError",
    "ContractViolation",
    "MeanViolation",
    "convergence_study",
    "flow_state",
    "laplacian",
    "run",
    "run_invariant_suite",
    "shear_layer_init",
    "skew_convection",
    "solve_poisson",
    "taylor_green_exact",
    "telescope_coefficients",
]
