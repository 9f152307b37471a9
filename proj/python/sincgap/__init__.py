"""Zeros and gap probabilities of random sinc series."""

from ._sincgap import (
    ContourError,
    DomainError,
    Error,
    NumericalError,
    ParameterError,
    SamplingError,
    __version__,
    count_zeros_rectangle,
    estimate_gap,
    eval_series,
    f0_profile,
    feldheim_S,
    find_real_zeros,
    kac_rice_real_intensity,
    rademacher_zero_free,
    run_cli,
    sample_coefficients,
    sinc,
    tail_moment_exact,
    volume,
)

__all__ = [name for name in dir() if not name.startswith("_")]
