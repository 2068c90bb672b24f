"""Equal-magnitude couplings: Bessel amplitudes and the symmetric profile.

With |gamma0| = |gamma1| the amplitudes reduce to Bessel functions and the
distribution is P(X_t = x) = J_|x|(2|gamma|t)^2, symmetric about the
origin. Cross-checks the closed form against the quadrature route and
overlays the large-t approximation.

Usage: python3 demos/equal_couplings_bessel.py [output.png]
"""

import math
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from periodic_ctqw import (
    LimitLaw,
    WalkParams,
    amplitude_field,
    distribution,
    finite_t_approximation,
)

gamma = 1.0 / (2.0 * math.sqrt(2.0))
params = WalkParams(gamma, gamma)

check = amplitude_field(params, 50.0, method="bessel")
quad = amplitude_field(params, 50.0, check.window_radius, method="quadrature")
print("closed form vs quadrature at t=50, max |diff| =",
      np.max(np.abs(check.values - quad.values)))

T = 500.0
dist = distribution(params, T, method="bessel")
law = LimitLaw.from_params(params)
approx = finite_t_approximation(law, dist.positions, T)

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(dist.positions, dist.probs, lw=0.6,
        label=f"J_|x|(2|gamma|t)^2, t = {T:g}")
ax.plot(dist.positions, approx, "r.", ms=2, label="large-t approximation")
ax.set_xlabel("x")
ax.set_ylabel("probability")
ax.legend()
fig.tight_layout()

target = sys.argv[1] if len(sys.argv) > 1 else "equal_couplings_bessel.png"
fig.savefig(target, dpi=150)
print(f"wrote {target}")
