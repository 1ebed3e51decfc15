# %% [markdown]
# Coherence over coupling, chirp and detuning
#
# Coarse versions of the coherence maps. Grids are kept small so the
# script finishes in about a minute; the CLI produces full-resolution data.
# Set CCARS_THREADS to control the number of worker processes.

# %%
import numpy as np

from ccars import CanonicalSetup, ScanAxis, scan_delta_chirp, scan_rabi_chirp
from _plot import figure

base = CanonicalSetup(tau0=10.0, chirp=-7.5)
rabi = ScanAxis("omega3_peak", 1.0, 9.0, 5)
chirp = ScanAxis("chirp_dimensionless", -10.0, 10.0, 9)
maps = {d: scan_rabi_chirp(base.replace(delta=d), rabi, chirp, n_steps=10000) for d in (0.0, 0.1)}
np.set_printoptions(precision=2, suppress=True, linewidth=120)
for d, res in maps.items():
    print(f"delta={d}: rows omega3_peak {rabi.values()}, columns chirp {chirp.values()}")
    print(res.values)

# %% detuning against chirp at weaker coupling; the map is symmetric under (delta, chirp) -> (-delta, -chirp)
fig8 = scan_delta_chirp(CanonicalSetup(omega3_peak=1.6, tau0=4.66), ScanAxis("delta", -0.4, 0.4, 9),
                        ScanAxis("chirp_dimensionless", -10.0, 10.0, 9), n_steps=10000)
print("max symmetry residual:", np.abs(fig8.values - fig8.values[::-1, ::-1]).max())


# %%
def draw(plt):
    fig, axes = plt.subplots(1, 3, figsize=(13, 3.5))
    for ax, (d, res) in zip(axes, maps.items()):
        ax.pcolormesh(chirp.values(), rabi.values(), res.values, vmin=0, vmax=0.5, shading="auto")
        ax.set(title=f"delta = {d}", xlabel="chirp", ylabel="Omega3(0)")
    axes[2].pcolormesh(fig8.axis2.values(), fig8.axis1.values(), fig8.values, vmin=0, vmax=0.5, shading="auto")
    axes[2].set(title="Omega3(0) = 1.6", xlabel="chirp", ylabel="delta")
    return fig


figure("coherence_maps", draw)
