"""Asymmetric walk distribution vs the symmetric large-t approximation.

Runs the walk with unequal couplings at t = 500 and overlays the
arcsine-type approximation on the probability profile. The simulated
distribution leans to one side while the approximation is even in x.

Usage: python3 demos/asymmetric_distribution.py [output.png]
"""

import math
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from periodic_ctqw import LimitLaw, WalkParams, distribution, finite_t_approximation

T = 500.0
params = WalkParams(1.0 / (2.0 * math.sqrt(2.0)), 1.0 / math.sqrt(2.0))

dist = distribution(params, T)
law = LimitLaw.from_params(params)
approx = finite_t_approximation(law, dist.positions, T)

print(f"couplings: gamma0={params.gamma0:.6f}, gamma1={params.gamma1:.6f}")
print(f"captured mass: {dist.captured_mass:.12f}")
print(f"support edge of the approximation: {2 * law.gamma_xi_abs * T:.2f}")

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(dist.positions, dist.probs, lw=0.6, label=f"P(X_t = x), t = {T:g}")
ax.plot(dist.positions, approx, "r.", ms=2, label="large-t approximation")
ax.set_xlabel("x")
ax.set_ylabel("probability")
ax.legend()
fig.tight_layout()

target = sys.argv[1] if len(sys.argv) > 1 else "asymmetric_distribution.png"
fig.savefig(target, dpi=150)
print(f"wrote {target}")
