"""Probability amplitudes of the walk and their position distributions.

Two computation routes live here: oscillatory-quadrature evaluation of the
momentum-space integral representations (any couplings), and the Bessel
closed forms valid when |gamma0| = |gamma1|. A third, the truncated-lattice
evolution, lives in :mod:`periodic_ctqw.lattice`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .bessel import bessel_j_sequence
from .errors import QuadratureError, RegimeError
from .params import Regime, WalkParams
from .quadrature import PANEL_ORDER, composite_nodes, initial_panels
from .spectral import g

METHOD_QUADRATURE = "quadrature"
METHOD_BESSEL = "bessel"
METHOD_LATTICE = "lattice"

REL_TOL = 1e-10
ABS_TOL = 1e-12
MAX_NODES = 4_000_000


@dataclass(frozen=True)
class AmplitudeField:
    """Complex amplitudes over the window {-R, ..., R} at one time."""

    t: float
    window_radius: int
    values: np.ndarray  # length 2R+1, index i <-> position i - R
    method: str

    def __post_init__(self):
        if len(self.values) != 2 * self.window_radius + 1:
            raise ValueError("values must cover the full window")

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.window_radius, self.window_radius + 1)

    def value_at(self, x: int) -> complex:
        if abs(x) > self.window_radius:
            raise IndexError(f"position {x} outside window")
        return complex(self.values[x + self.window_radius])

    @property
    def total_mass(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))

    def to_distribution(self) -> "PositionDistribution":
        return PositionDistribution(
            t=self.t, positions=self.positions,
            probs=np.abs(self.values) ** 2, method=self.method)


@dataclass(frozen=True)
class PositionDistribution:
    """Detection probabilities |psi_t(x)|^2 over a finite window."""

    t: float
    positions: np.ndarray
    probs: np.ndarray
    method: str = field(default=METHOD_QUADRATURE)

    @property
    def captured_mass(self) -> float:
        return float(np.sum(self.probs))

    def prob_at(self, x: int) -> float:
        idx = np.searchsorted(self.positions, x)
        if idx >= len(self.positions) or self.positions[idx] != x:
            raise IndexError(f"position {x} outside window")
        return float(self.probs[idx])


def _band_factors(params: WalkParams, t: float, k: np.ndarray):
    """cos(sqrt(g) t) and sin(sqrt(g) t)/sqrt(g) on the node set.

    The second factor has only removable zeros of g, handled exactly by the
    sinc form sin(s t)/s = t*sinc(s t / pi).
    """
    s = np.sqrt(g(params, k))
    return np.cos(s * t), t * np.sinc(s * t / np.pi)


def _min_nodes(params: WalkParams, t: float, max_freq: int) -> int:
    # ~10 nodes per unit of t*max|gamma| plus resolution for cos(2nk).
    return max(64, int(math.ceil(10.0 * t * params.gamma_max_abs))
               + 4 * max_freq)


def amplitude_even(params: WalkParams, n: int, t: float,
                   rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> complex:
    """Amplitude at even position 2n via the cosine-transform integral."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    val = _adaptive_scalar(
        lambda k: np.cos(2 * n * k) * _band_factors(params, t, k)[0],
        params, t, abs(2 * n), rel_tol, abs_tol)
    return complex((2.0 / math.pi) * val)


def amplitude_odd(params: WalkParams, n: int, t: float,
                  rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> complex:
    """Amplitude at odd position 2n+1 (n may be negative)."""
    if t < 0:
        raise ValueError("time must be nonnegative")

    def integrand(k):
        sinc = _band_factors(params, t, k)[1]
        return (params.gamma0 * np.cos(2 * n * k)
                + params.gamma1 * np.cos(2 * (n + 1) * k)) * sinc

    val = _adaptive_scalar(integrand, params, t, 2 * abs(n) + 2,
                           rel_tol, abs_tol)
    return complex(-1j * (2.0 / math.pi) * val)


def _adaptive_scalar(f, params, t, max_freq, rel_tol, abs_tol) -> float:
    panels = initial_panels(_min_nodes(params, t, max_freq))
    nodes, weights = composite_nodes(0.0, 0.5 * math.pi, panels)
    estimate = float(np.dot(weights, f(nodes)))
    while True:
        panels *= 2
        if panels * PANEL_ORDER > MAX_NODES:
            raise QuadratureError("amplitude quadrature budget exhausted")
        nodes, weights = composite_nodes(0.0, 0.5 * math.pi, panels)
        refined = float(np.dot(weights, f(nodes)))
        if abs(refined - estimate) <= max(abs_tol, rel_tol * abs(refined)):
            return refined
        estimate = refined


def amplitude_bessel(params: WalkParams, x: int, t: float) -> complex:
    """Closed-form amplitude for |gamma0| = |gamma1|."""
    if params.regime is not Regime.EQUAL_MAGNITUDE:
        raise RegimeError("Bessel closed forms require |gamma0| = |gamma1|")
    seq = bessel_j_sequence(abs(int(x)), 2.0 * abs(params.gamma0) * t)
    return _bessel_value(params, int(x), seq)


def _bessel_value(params: WalkParams, x: int, seq: np.ndarray) -> complex:
    gamma = params.gamma0
    sgn = math.copysign(1.0, gamma)
    j = seq[abs(x)]
    same_sign = params.gamma1 == gamma
    if x % 2 == 0:
        if same_sign:
            return complex(((-1) ** (abs(x) // 2)) * j)
        return complex(j)
    n = (abs(x) - 1) // 2
    if same_sign:
        return complex(-1j * ((-1) ** n) * sgn * j)
    # gamma1 = -gamma0: the odd prefactor flips sign across x = 0
    return complex(-1j * sgn * j) if x > 0 else complex(1j * sgn * j)


def _quadrature_field(params: WalkParams, t: float, radius: int,
                      rel_tol: float = REL_TOL,
                      abs_tol: float = ABS_TOL) -> np.ndarray:
    """All window amplitudes from one shared node set, panel-doubled.

    Even positions are computed for n >= 0 and mirrored, making the even
    symmetry of the field exact by construction.
    """
    n_even = np.arange(0, radius // 2 + 1)
    # odd positions x = 2n+1 inside the window
    n_odd = np.arange(-((radius + 1) // 2), (radius - 1) // 2 + 1)

    panels = initial_panels(_min_nodes(params, t, 2 * radius))
    previous = None
    while True:
        if panels * PANEL_ORDER > MAX_NODES:
            raise QuadratureError("distribution quadrature budget exhausted")
        nodes, weights = composite_nodes(0.0, 0.5 * math.pi, panels)
        cos_part, sinc_part = _band_factors(params, t, nodes)
        even = (2.0 / math.pi) * (
            np.cos(np.outer(2 * n_even, nodes)) @ (weights * cos_part))
        odd_weights = weights * sinc_part
        odd = -1j * (2.0 / math.pi) * (
            params.gamma0 * (np.cos(np.outer(2 * n_odd, nodes)) @ odd_weights)
            + params.gamma1 * (np.cos(np.outer(2 * (n_odd + 1), nodes))
                               @ odd_weights))
        current = _assemble_window(radius, n_even, even, n_odd, odd)
        if previous is not None:
            err = np.max(np.abs(current - previous))
            if err <= max(abs_tol, rel_tol * max(1e-300, np.max(np.abs(current)))):
                return current
        previous = current
        panels *= 2


def _assemble_window(radius, n_even, even_vals, n_odd, odd_vals) -> np.ndarray:
    values = np.zeros(2 * radius + 1, dtype=complex)
    values[n_even * 2 + radius] = even_vals
    values[-n_even * 2 + radius] = even_vals  # exact mirror
    values[(2 * n_odd + 1) + radius] = odd_vals
    return values


def _bessel_field(params: WalkParams, t: float, radius: int) -> np.ndarray:
    if params.regime is not Regime.EQUAL_MAGNITUDE:
        raise RegimeError("Bessel method requires |gamma0| = |gamma1|")
    seq = bessel_j_sequence(radius, 2.0 * abs(params.gamma0) * t)
    values = np.zeros(2 * radius + 1, dtype=complex)
    for x in range(-radius, radius + 1):
        values[x + radius] = _bessel_value(params, x, seq)
    return values


def amplitude_field(params: WalkParams, t: float, window_radius: int | None = None,
                    method: str = METHOD_QUADRATURE) -> AmplitudeField:
    """Amplitudes over {-R, ..., R} by the chosen method."""
    if t < 0:
        raise ValueError("time must be nonnegative")
    if method not in (METHOD_QUADRATURE, METHOD_BESSEL, METHOD_LATTICE):
        raise ValueError(f"unknown method {method!r}")
    radius = _resolve_radius(params, t, window_radius)
    if method == METHOD_QUADRATURE:
        values = _quadrature_field(params, t, radius)
    elif method == METHOD_BESSEL:
        values = _bessel_field(params, t, radius)
    else:
        from .lattice import evolve
        return evolve(params, t, radius)
    return AmplitudeField(t=t, window_radius=radius, values=values,
                          method=method)


def distribution(params: WalkParams, t: float, window_radius: int | None = None,
                 method: str = METHOD_QUADRATURE) -> PositionDistribution:
    """Position distribution P(X_t = x) over the window."""
    return amplitude_field(params, t, window_radius, method).to_distribution()


def _resolve_radius(params: WalkParams, t: float,
                    window_radius: int | None) -> int:
    rule = params.light_cone_radius(t)
    if window_radius is None:
        return rule
    if window_radius < rule:
        warnings.warn(
            f"window radius {window_radius} below light-cone rule {rule}; "
            "probability mass will be truncated", stacklevel=3)
    return int(window_radius)
