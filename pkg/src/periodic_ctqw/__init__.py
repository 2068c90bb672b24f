"""Continuous-time quantum walk on Z with alternating bond couplings.

Simulates the walk launched from the origin under a 2-periodic tridiagonal
Hamiltonian, computes its position distribution by three mutually validating
routes (oscillatory quadrature, Bessel closed forms, exact truncated-lattice
evolution), and evaluates the arcsine-type long-time limit law of the
rescaled position X_t/t.
"""

from .amplitudes import (
    METHOD_BESSEL,
    METHOD_LATTICE,
    METHOD_QUADRATURE,
    AmplitudeField,
    PositionDistribution,
    amplitude_bessel,
    amplitude_even,
    amplitude_field,
    amplitude_odd,
    distribution,
)
from .bessel import bessel_j, bessel_j_sequence
from .errors import (
    CtqwError,
    DomainError,
    EigenError,
    MassError,
    QuadratureError,
    RegimeError,
)
from .lattice import TruncatedHamiltonian, build_hamiltonian, evolve
from .limitlaw import (
    LimitLaw,
    empirical_cdf_distance,
    empirical_moment,
    finite_t_approximation,
    limit_cdf,
    limit_density,
    limit_moment,
    moment_limit_via_h,
)
from .params import Regime, WalkParams
from .spectral import (
    SpectralProfile,
    I_fn,
    f_branch_derivative,
    g,
    h,
    h_at_k_star,
    h_prime,
    k_branches,
    k_star,
    sample_profile,
    velocity_interval,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeField", "PositionDistribution", "LimitLaw", "SpectralProfile",
    "TruncatedHamiltonian", "WalkParams", "Regime",
    "CtqwError", "DomainError", "EigenError", "MassError",
    "QuadratureError", "RegimeError",
    "METHOD_QUADRATURE", "METHOD_BESSEL", "METHOD_LATTICE",
    "amplitude_even", "amplitude_odd", "amplitude_bessel",
    "amplitude_field", "distribution",
    "bessel_j", "bessel_j_sequence",
    "build_hamiltonian", "evolve",
    "limit_density", "limit_cdf", "finite_t_approximation",
    "limit_moment", "moment_limit_via_h", "empirical_moment",
    "empirical_cdf_distance",
    "g", "I_fn", "h", "h_prime", "k_star", "h_at_k_star",
    "k_branches", "f_branch_derivative", "velocity_interval",
    "sample_profile",
]
