"""Photon statistics: the Mandel parameter and the effect of the drive.

Q < 0 flags sub-Poissonian (nonclassical) light, Q = 0 is the coherent
baseline, Q > 0 super-Poissonian bunching.  Without the drive the
collapse-and-revival beating of the Rabi oscillations makes Q alternate in
sign out to long times.  A strong drive (gamma = 6) changes the picture
completely: after a brief sub-Poissonian transient the field settles into
large periodic super-Poissonian swings.

Note the very different vertical scales of the two columns.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from djcm import CONFIGURATIONS, SystemParams, assemble_state, mandel_q

ALPHA = 5.0
GTS = np.linspace(0.0, 25.0, 601)

fig, axes = plt.subplots(3, 2, figsize=(10, 9), sharex=True)
for row, kind in zip(axes, ("V", "Xi", "Lambda")):
    for ax, gamma in zip(row, (0.0, 6.0)):
        params = SystemParams(CONFIGURATIONS[kind], alpha=ALPHA, gamma=gamma)
        q = [mandel_q(assemble_state(gt, params), gamma) for gt in GTS]
        ax.plot(GTS, q, lw=0.8)
        ax.axhline(0.0, color="k", lw=0.5, ls=":")
        ax.set_title(rf"{kind}-type, $\gamma = {gamma:g}$", fontsize=10)
for ax in axes[-1]:
    ax.set_xlabel(r"scaled time $gt$")
for ax in axes[:, 0]:
    ax.set_ylabel(r"$Q$")
fig.tight_layout()
fig.savefig("photon_statistics.png", dpi=150)
print("saved photon_statistics.png")
