"""Momentum-space machinery of the 2-periodic walk.

Band quantities g(k) and I(k), the group-velocity function h(k) with its
derivative and extremum, the inverse branches k_plus/k_minus of h on
[0, pi/2], and the branch derivatives f_plus/f_minus that collapse to the
arcsine-type density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .params import Regime, WalkParams

# arccos arguments this close outside [-1, 1] are treated as rounding noise
_CLAMP_ULPS = 4


def g(params: WalkParams, k):
    """Squared band energy gamma0^2 + gamma1^2 + 2*gamma0*gamma1*cos(2k)."""
    return (params.gamma0 ** 2 + params.gamma1 ** 2
            + 2.0 * params.gamma0 * params.gamma1 * np.cos(2.0 * np.asarray(k, dtype=float)))


def I_fn(params: WalkParams, k):
    """Off-diagonal coupling symbol gamma0*e^{ik} + gamma1*e^{-ik}.

    Its modulus squared equals g(k) identically.
    """
    k = np.asarray(k, dtype=float)
    return params.gamma0 * np.exp(1j * k) + params.gamma1 * np.exp(-1j * k)


def h(params: WalkParams, k):
    """Group-velocity function 2*gamma0*gamma1*sin(2k)/sqrt(g(k)).

    Pi-periodic with h(pi - k) = -h(k); range [-2*gamma_xi, 2*gamma_xi] in
    the generic regime. Undefined where g vanishes (equal-magnitude regime
    only).
    """
    gk = g(params, k)
    if np.any(gk == 0.0):
        raise DomainError("h(k) undefined where g(k) = 0")
    k = np.asarray(k, dtype=float)
    val = 2.0 * params.gamma0 * params.gamma1 * np.sin(2.0 * k) / np.sqrt(gk)
    return val if val.ndim else float(val)


def h_prime(params: WalkParams, k):
    """Closed-form derivative of h."""
    gk = g(params, k)
    if np.any(gk == 0.0):
        raise DomainError("h'(k) undefined where g(k) = 0")
    k = np.asarray(k, dtype=float)
    c = np.cos(2.0 * k)
    val = (4.0 * params.gamma0 ** 2 * params.gamma1 ** 2 / (gk * np.sqrt(gk))
           * (c + params.gamma1 / params.gamma0)
           * (c + params.gamma0 / params.gamma1))
    return val if val.ndim else float(val)


def _require_generic(params: WalkParams, what: str):
    if params.regime is not Regime.GENERIC:
        raise DomainError(f"{what} is defined only for |gamma0| != |gamma1|")


def _safe_arccos(a: float) -> float:
    if -1.0 <= a <= 1.0:
        return math.acos(a)
    slack = _CLAMP_ULPS * np.spacing(1.0)
    if abs(a) <= 1.0 + slack:
        return math.acos(max(-1.0, min(1.0, a)))
    raise DomainError(f"arccos argument {a} outside [-1, 1]")


def k_star(params: WalkParams) -> float:
    """Unique extremum of h on [0, pi/2]."""
    _require_generic(params, "k_star")
    if abs(params.gamma0) > abs(params.gamma1):
        ratio = params.gamma1 / params.gamma0
    else:
        ratio = params.gamma0 / params.gamma1
    return 0.5 * _safe_arccos(-ratio)


def h_at_k_star(params: WalkParams) -> float:
    """Extreme value of h: +/- 2*gamma_xi with the sign of gamma0*gamma1."""
    _require_generic(params, "h(k_star)")
    return 2.0 * params.gamma_xi_abs * params.product_sign


def velocity_interval(params: WalkParams) -> tuple[float, float]:
    """Closed x-interval on which h(k) = x has the two branch solutions."""
    _require_generic(params, "velocity interval")
    edge = 2.0 * params.gamma_xi_abs
    return (0.0, edge) if params.product_sign > 0 else (-edge, 0.0)


def k_branches(params: WalkParams, x: float) -> tuple[float, float]:
    """Both solutions of h(k) = x on [0, pi/2], ordered k_plus <= k_minus."""
    _require_generic(params, "k_branches")
    lo, hi = velocity_interval(params)
    if not lo <= x <= hi:
        raise DomainError(f"velocity {x} outside [{lo}, {hi}]")
    if x == 0.0:
        # Exact roots of h; the branch formulas hit arccos(+/-1) here.
        return 0.0, 0.5 * math.pi
    s0 = math.sqrt(max(0.0, 4.0 * params.gamma0 ** 2 - x * x))
    s1 = math.sqrt(max(0.0, 4.0 * params.gamma1 ** 2 - x * x))
    denom = 4.0 * params.gamma0 * params.gamma1
    sign = 1.0 if params.product_sign > 0 else -1.0
    kp = 0.5 * _safe_arccos((-x * x + sign * s0 * s1) / denom)
    km = 0.5 * _safe_arccos((-x * x - sign * s0 * s1) / denom)
    return kp, km


def f_branch_derivative(params: WalkParams, x: float, branch: str) -> float:
    """Derivative of the inverse branch k_plus(x) or k_minus(x).

    branch is "+" or "-". Undefined at x = 0 (sign factor) and at the
    support edges |x| = 2*gamma_xi (square-root singularity).
    """
    _require_generic(params, "f_branch_derivative")
    if branch not in ("+", "-"):
        raise ValueError('branch must be "+" or "-"')
    if x == 0.0:
        raise DomainError("branch derivative undefined at x = 0")
    if abs(x) >= 2.0 * params.gamma_xi_abs:
        raise DomainError("branch derivative singular at |x| >= 2*gamma_xi")
    pm = 1.0 if branch == "+" else -1.0
    s0 = math.sqrt(4.0 * params.gamma0 ** 2 - x * x)
    s1 = math.sqrt(4.0 * params.gamma1 ** 2 - x * x)
    return (pm * 0.5 * math.copysign(1.0, x) * params.product_sign
            * abs(s0 + pm * s1) / (s0 * s1))


_PROFILE_FUNCTIONS = ("g", "abs_I", "h", "h_prime",
                      "k_plus", "k_minus", "f_plus", "f_minus")


@dataclass(frozen=True)
class SpectralProfile:
    """Sampled spectral function over a strictly increasing grid."""

    k_grid: np.ndarray
    values: np.ndarray
    function_id: str

    def __post_init__(self):
        if self.function_id not in _PROFILE_FUNCTIONS:
            raise ValueError(f"unknown function_id {self.function_id!r}")
        if np.any(np.diff(self.k_grid) <= 0):
            raise ValueError("grid must be strictly increasing")


def sample_profile(params: WalkParams, function_id: str,
                   grid: np.ndarray) -> SpectralProfile:
    """Evaluate one spectral function on a grid (momentum or velocity)."""
    grid = np.asarray(grid, dtype=float)
    if function_id == "g":
        values = g(params, grid)
    elif function_id == "abs_I":
        values = np.abs(I_fn(params, grid))
    elif function_id == "h":
        values = h(params, grid)
    elif function_id == "h_prime":
        values = h_prime(params, grid)
    elif function_id in ("k_plus", "k_minus"):
        idx = 0 if function_id == "k_plus" else 1
        values = np.array([k_branches(params, x)[idx] for x in grid])
    elif function_id in ("f_plus", "f_minus"):
        branch = "+" if function_id == "f_plus" else "-"
        values = np.array([f_branch_derivative(params, x, branch)
                           for x in grid])
    else:
        raise ValueError(f"unknown function_id {function_id!r}")
    return SpectralProfile(k_grid=grid, values=values, function_id=function_id)
