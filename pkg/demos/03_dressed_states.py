# %% [markdown]
# Dressed-state picture
#
# After the pulse centre the C-CARS schedule removes the linear sweep from
# the effective two-level Hamiltonian. On resonance the mixing angle then
# stays frozen and the non-adiabatic coupling is exactly zero; a small
# detuning turns it back on. Weak coupling makes the passage much less
# adiabatic, which the Landau-Zener style ratio Omega^2/|alpha| quantifies.

# %%
import numpy as np

from ccars import CanonicalSetup, analyze, landau_zener_ratio, temporal_chirp
from _plot import figure

strong = CanonicalSetup(omega3_peak=5.0, tau0=10.0, chirp=-7.5)
weak = CanonicalSetup(omega3_peak=0.18, tau0=25.0, chirp=-0.8)
for name, s in (("strong", strong), ("weak", weak)):
    a = temporal_chirp(s.alpha_s_spectral, s.tau0)
    print(f"{name}: Omega^2/|alpha| = {landau_zener_ratio(s.omega3_peak, a):.4g}")

# %%
series = {}
for delta in (0.0, 0.1):
    spec = strong.replace(delta=delta).spec(warn=False)
    t = np.linspace(spec.t_center - 3 * spec.tau, spec.t_center + 3 * spec.tau, 3001)
    series[delta] = d = analyze(spec, t)
    after = d.t > spec.t_center
    print(f"delta={delta}: max |theta_dot| after centre = {np.abs(d.theta_dot[after]).max():.3e}")


# %%
def draw(plt):
    fig, axes = plt.subplots(2, 2, figsize=(10, 6), sharex=True)
    for col, (delta, d) in enumerate(series.items()):
        axes[0, col].plot(d.t, d.e1, "--", d.t, d.e2, "--", d.t, d.lambda1, d.t, d.lambda2)
        axes[0, col].set_title(f"delta = {delta}")
        axes[1, col].plot(d.t, d.theta_dot)
        axes[1, col].set_xlabel("t [1/w21]")
    axes[0, 0].set_ylabel("energy [w21]")
    axes[1, 0].set_ylabel("theta_dot")
    return fig


figure("dressed", draw)
