"""Atom-atom entanglement through the negativity of the partial transpose.

The two atoms alone are in a mixed state, so entropy cannot quantify their
mutual entanglement; negativity can.  It vanishes at t = 0 (product state)
and then oscillates irregularly.  For the Lambda scheme the atomic marginal
has rank at most three, which makes the positive-partial-transpose test
conclusive: whenever the curve is zero the atoms really are separable, and
whatever entanglement appears is distillable.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from djcm import CONFIGURATIONS, SystemParams, assemble_state, negativity, rho_atoms

ALPHA = 5.0
GAMMAS = (0.0, 2.0, 6.0)
GTS = np.linspace(0.0, 25.0, 401)

fig, axes = plt.subplots(3, 1, figsize=(7, 9), sharex=True)
for ax, kind in zip(axes, ("V", "Xi", "Lambda")):
    for gamma in GAMMAS:
        params = SystemParams(CONFIGURATIONS[kind], alpha=ALPHA, gamma=gamma)
        values = [negativity(rho_atoms(assemble_state(gt, params))) for gt in GTS]
        ax.plot(GTS, values, lw=1.0, label=rf"$\gamma = {gamma:g}$")
    ax.set_ylabel("negativity")
    ax.set_title(f"{kind}-type atoms")
    ax.legend(loc="upper right", fontsize=8)
axes[-1].set_xlabel(r"scaled time $gt$")
fig.tight_layout()
fig.savefig("negativity_dynamics.png", dpi=150)
print("saved negativity_dynamics.png")
