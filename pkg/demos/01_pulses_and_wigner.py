# %% [markdown]
# Chirped pulses and their time-frequency picture
#
# A spectral chirp stretches a Gaussian pulse and lowers its peak while
# keeping the pulse energy fixed. The Wigner map shows the carrier
# frequency sweeping linearly in time; under the C-CARS schedule the pump
# and probe sweeps change at the pulse centre while the Stokes sweep does not.

# %%
import numpy as np

from ccars import ChirpSchedule, PulseParams, Role, chirped_duration, ridge_argmax, temporal_chirp, wigner_grid
from _plot import figure

tau0 = 10.0
for a in (0.0, 100.0, -750.0):
    print(f"alpha'={a:8.1f}  tau={chirped_duration(a, tau0):8.3f}  alpha={temporal_chirp(a, tau0):+.5e}")

# %%
alpha_s, tau, tc = -0.2, 3.0, 7.5
sched = ChirpSchedule.from_temporal("ccars", alpha_s, tau, tc)
times = np.linspace(0, 15, 151)
omegas = np.linspace(0, 8, 401)
carriers = {Role.PUMP: 4.0, Role.STOKES: 3.0, Role.PROBE: 4.0}
maps = {}
for role, wq in carriers.items():
    p = PulseParams.from_chirped(role, wq, 1.0, tau, alpha_s, tc)
    maps[role] = wigner_grid(p, times, omegas, sched)
    ridge = ridge_argmax(maps[role], omegas)
    before = np.polyfit(times[times <= tc] - tc, ridge[times <= tc], 1)[0]
    after = np.polyfit(times[times > tc] - tc, ridge[times > tc], 1)[0]
    print(f"{role.value:7s} ridge slope before {before:+.3f}, after {after:+.3f}")


# %%
def draw(plt):
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.5), sharey=True)
    for ax, (role, w) in zip(axes, maps.items()):
        ax.pcolormesh(times, omegas, w.T, shading="auto", cmap="RdBu_r")
        ax.set_title(role.value)
        ax.set_xlabel("t [1/w21]")
    axes[0].set_ylabel("omega [w21]")
    return fig


figure("wigner_maps", draw)
