"""Saddle configurations of N classical electrons in the potential of a
nucleus plus a static electric field (scaled units, F = 1 by default)."""

from ionsaddles._core import (  # noqa: F401
    ExponentReport,
    ModelParams,
    NewtonResult,
    NotStationaryError,
    RingPlusCenterResult,
    RingPlusCenterSaddle,
    RingSaddle,
    SaddleRecord,
    SearchParams,
    SingularConfigurationError,
    StabilitySpectrum,
    SymmetryLabel,
    __version__,
    analyze,
    canonical_invariants,
    canonical_orientation,
    classify,
    equivalent,
    exponents,
    gradient,
    hessian,
    max_ring_n,
    newton_refine,
    potential_energy,
    repulsion_sum,
    rescale,
    rescale_energy,
    rescale_lyapunov,
    ring_exists,
    ring_plus_center_saddle,
    ring_saddle,
    search,
    w_fit,
)
