"""Long-time limit law of the rescaled position X_t/t.

The limit density is arcsine-type, 1/(pi*sqrt(4*gxi^2 - x^2)) on the open
interval (-2*gxi, 2*gxi) with gxi the smaller coupling magnitude. Also
provides the finite-time approximation to P(X_t = x), closed-form and
quadrature moments, and empirical comparison against simulated
distributions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import PositionDistribution
from .errors import MassError, RegimeError
from .params import Regime, WalkParams
from .quadrature import adaptive_integrate
from .spectral import h

_MIN_MASS = 1.0 - 1e-6


@dataclass(frozen=True)
class LimitLaw:
    """Arcsine-type law on (-2*gamma_xi, 2*gamma_xi)."""

    gamma_xi_abs: float

    def __post_init__(self):
        if not self.gamma_xi_abs > 0:
            raise ValueError("gamma_xi_abs must be positive")

    @classmethod
    def from_params(cls, params: WalkParams) -> "LimitLaw":
        # In both regimes the law depends only on the smaller magnitude
        # (which in the equal-magnitude case is |gamma0| itself).
        return cls(gamma_xi_abs=params.gamma_xi_abs)

    @property
    def support(self) -> tuple[float, float]:
        edge = 2.0 * self.gamma_xi_abs
        return (-edge, edge)


def limit_density(law: LimitLaw, x):
    """Density of the limit law; zero outside the open support."""
    x = np.asarray(x, dtype=float)
    edge = 2.0 * law.gamma_xi_abs
    inside = np.abs(x) < edge
    out = np.zeros_like(x)
    xs = np.where(inside, x, 0.0)
    np.copyto(out, 1.0 / (np.pi * np.sqrt(edge * edge - xs * xs)),
              where=inside)
    return out if out.ndim else float(out)


def limit_cdf(law: LimitLaw, x):
    """Closed-form arcsine CDF of the limit law."""
    x = np.asarray(x, dtype=float)
    edge = 2.0 * law.gamma_xi_abs
    clipped = np.clip(x / edge, -1.0, 1.0)
    out = 0.5 + np.arcsin(clipped) / np.pi
    return out if out.ndim else float(out)


def finite_t_approximation(law: LimitLaw, x, t: float):
    """Large-t approximation to P(X_t = x): density of t*(limit law) at x."""
    if t <= 0:
        raise ValueError("time must be positive")
    x = np.asarray(x, dtype=float)
    edge = 2.0 * law.gamma_xi_abs * t
    inside = np.abs(x) < edge
    out = np.zeros_like(x)
    xs = np.where(inside, x, 0.0)
    np.copyto(out, 1.0 / (np.pi * np.sqrt(edge * edge - xs * xs)),
              where=inside)
    return out if out.ndim else float(out)


def limit_moment(law: LimitLaw, r: int) -> float:
    """r-th moment of the limit law, closed form."""
    if r < 0:
        raise ValueError("moment order must be nonnegative")
    if r % 2:
        return 0.0
    edge = 2.0 * law.gamma_xi_abs
    return edge ** r * math.comb(r, r // 2) / 2.0 ** r


def moment_limit_via_h(params: WalkParams, r: int,
                       rel_tol: float = 1e-12, abs_tol: float = 1e-13) -> float:
    """r-th limit moment from the group-velocity integrals on [0, pi/2].

    Independent route: integrates h(k)^r and (-h(k))^r directly; must agree
    with the closed-form arcsine moment.
    """
    if params.regime is not Regime.GENERIC:
        raise RegimeError("h-integral moments require |gamma0| != |gamma1|")
    if r < 0:
        raise ValueError("moment order must be nonnegative")
    if r % 2:
        return 0.0
    integral = adaptive_integrate(
        lambda k: h(params, k) ** r, 0.0, 0.5 * math.pi,
        rel_tol=rel_tol, abs_tol=abs_tol, min_nodes=128)
    return 2.0 * float(integral) / math.pi


def empirical_moment(dist: PositionDistribution, r: int) -> float:
    """Estimate of E[(X_t/t)^r] from a simulated distribution."""
    _check_mass(dist)
    raw = float(np.sum(dist.positions.astype(float) ** r * dist.probs))
    if dist.t == 0:
        return raw  # point mass at the origin; no rescaling needed
    return raw / dist.t ** r


def empirical_cdf_distance(dist: PositionDistribution, law: LimitLaw) -> float:
    """Kolmogorov sup-distance between the CDF of X_t/t and the limit CDF.

    Evaluated at both sides of every atom of the rescaled empirical law and
    on a uniform sweep of the support.
    """
    _check_mass(dist)
    t = dist.t if dist.t > 0 else 1.0
    xs = dist.positions.astype(float) / t
    cum = np.cumsum(dist.probs)
    target = limit_cdf(law, xs)
    before = np.concatenate(([0.0], cum[:-1]))
    dist_at_atoms = np.max(np.maximum(np.abs(cum - target),
                                      np.abs(before - target)))
    lo, hi = law.support
    sweep = np.linspace(lo, hi, 1000)
    emp_at_sweep = _step_cdf(xs, cum, sweep)
    dist_at_sweep = np.max(np.abs(emp_at_sweep - limit_cdf(law, sweep)))
    return float(max(dist_at_atoms, dist_at_sweep))


def _step_cdf(atoms: np.ndarray, cum: np.ndarray, x: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(atoms, x, side="right")
    padded = np.concatenate(([0.0], cum))
    return padded[idx]


def _check_mass(dist: PositionDistribution):
    if dist.captured_mass <= _MIN_MASS:
        raise MassError(
            f"captured mass {dist.captured_mass:.9f} below {_MIN_MASS}")
