"""Geodesic-oscillator toolkit: Python face of the geosho C++ core."""

from geosho._core import (  # noqa: F401
    ConfigError,
    IoError,
    __version__,
    aqc_schedule,
    fisher_information,
    gamma_from_period,
    gr_sho_frequency,
    jacobi_newton_deviation,
    list_experiments,
    optimal_iterations,
    radial_oscillation,
    ruchhardt_frequency,
    run_config,
    selftest,
    selftest_csv,
    speed_dispersion_pair,
    success_probability,
    surface_matching_defect,
)

__all__ = [
    "ConfigError",
    "IoError",
    "__version__",
    "aqc_schedule",
    "fisher_information",
    "gamma_from_period",
    "gr_sho_frequency",
    "jacobi_newton_deviation",
    "list_experiments",
    "optimal_iterations",
    "radial_oscillation",
    "ruchhardt_frequency",
    "run_config",
    "selftest",
    "selftest_csv",
    "speed_dispersion_pair",
    "success_probability",
    "surface_matching_defect",
]
