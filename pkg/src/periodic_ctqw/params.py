"""Walk parameters: the alternating coupling pair (gamma0, gamma1)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# |gamma0| and |gamma1| closer than this triggers a stiffness warning at the
# CLI level; the regime classification itself stays exact.
NEAR_DEGENERATE_GAP = 1e-9


class Regime(enum.Enum):
    GENERIC = "generic"            # |gamma0| != |gamma1|
    EQUAL_MAGNITUDE = "equal_magnitude"  # gamma1 = +/- gamma0


@dataclass(frozen=True)
class WalkParams:
    """Coupling pair of the 2-periodic chain.

    Bonds alternate: even sites couple rightward with ``gamma0``, odd sites
    with ``gamma1``. Both couplings must be nonzero reals.
    """

    gamma0: float
    gamma1: float

    def __post_init__(self):
        if self.gamma0 == 0.0 or self.gamma1 == 0.0:
            raise ValueError("couplings gamma0 and gamma1 must be nonzero")
        if not (math.isfinite(self.gamma0) and math.isfinite(self.gamma1)):
            raise ValueError("couplings must be finite")

    @property
    def regime(self) -> Regime:
        # Exact floating comparison: the two analytic cases are disjoint.
        if abs(self.gamma0) == abs(self.gamma1):
            return Regime.EQUAL_MAGNITUDE
        return Regime.GENERIC

    @property
    def gamma_xi_abs(self) -> float:
        """Magnitude of the smaller coupling; sets the limit-law support."""
        return min(abs(self.gamma0), abs(self.gamma1))

    @property
    def gamma_max_abs(self) -> float:
        return max(abs(self.gamma0), abs(self.gamma1))

    @property
    def product_sign(self) -> float:
        """Sign of gamma0*gamma1 (+1.0 or -1.0)."""
        return math.copysign(1.0, self.gamma0 * self.gamma1)

    @property
    def near_degenerate(self) -> bool:
        """True when the regime boundary is closer than NEAR_DEGENERATE_GAP."""
        gap = abs(abs(self.gamma0) - abs(self.gamma1))
        return 0.0 < gap < NEAR_DEGENERATE_GAP

    def light_cone_radius(self, t: float, buffer: int = 20) -> int:
        """Window radius capturing essentially all mass at time t.

        Amplitudes decay super-exponentially beyond |x| > 2*max|gamma|*t, so
        a fixed buffer past the front suffices.
        """
        return int(math.ceil(2.0 * self.gamma_max_abs * t)) + buffer
