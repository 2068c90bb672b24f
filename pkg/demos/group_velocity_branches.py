"""Group-velocity function h(k) and its inverse branches.

Plots h on [-pi, pi] for both signs of the coupling product, then the two
inverse branches k_plus(x) <= k_minus(x) on the valid velocity interval.
The range of h is set entirely by the smaller coupling magnitude.

Usage: python3 demos/group_velocity_branches.py [output.png]
"""

import math
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from periodic_ctqw import WalkParams, h, k_branches, k_star, velocity_interval

positive = WalkParams(1.0 / (2.0 * math.sqrt(2.0)), 1.0 / math.sqrt(2.0))
negative = WalkParams(1.0, -0.5)

fig, axes = plt.subplots(2, 2, figsize=(9, 6))

for ax, params, title in ((axes[0, 0], positive, "gamma0*gamma1 > 0"),
                          (axes[0, 1], negative, "gamma0*gamma1 < 0")):
    ks = np.linspace(-math.pi, math.pi, 2001)
    ax.plot(ks, h(params, ks))
    edge = 2 * params.gamma_xi_abs
    ax.axhline(edge, color="gray", ls=":", lw=0.8)
    ax.axhline(-edge, color="gray", ls=":", lw=0.8)
    ax.set_title(title)
    ax.set_xlabel("k")
    ax.set_ylabel("h(k)")
    print(f"{title}: extremum at k* = {k_star(params):.6f}, "
          f"range edge 2|gamma_xi| = {edge:.6f}")

for ax, params, title in ((axes[1, 0], positive, "branches, positive product"),
                          (axes[1, 1], negative, "branches, negative product")):
    lo, hi = velocity_interval(params)
    xs = np.linspace(lo, hi, 400)
    kp = [k_branches(params, x)[0] for x in xs]
    km = [k_branches(params, x)[1] for x in xs]
    ax.plot(xs, kp, label="k_plus")
    ax.plot(xs, km, label="k_minus")
    ax.set_title(title)
    ax.set_xlabel("x")
    ax.set_ylabel("k(x)")
    ax.legend()

fig.tight_layout()
target = sys.argv[1] if len(sys.argv) > 1 else "group_velocity_branches.png"
fig.savefig(target, dpi=150)
print(f"wrote {target}")
