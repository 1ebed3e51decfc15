# %% [markdown]
# How good is the super-effective two-level model?
#
# Eliminating the far-detuned intermediate states is accurate when the one-
# photon detuning dominates the pulse amplitudes. Here we compare final
# coherences as the detuning grows relative to a fixed peak coupling.

# %%
from ccars import CanonicalSetup, final_state, propagate

for big in (1.0, 3.0, 10.0):
    s = CanonicalSetup(omega3_peak=2.0, tau0=10.0, chirp=-7.5, delta=0.05, delta_s=big, delta_as=big)
    c2 = final_state(propagate(s.spec(warn=False)))[1]
    c4 = final_state(propagate(s.replace(model="four_level").spec(warn=False)))[1]
    print(f"Delta={big:5.1f}  two-level {c2:.5f}  four-level {c4:.5f}  diff {abs(c2 - c4):.2e}")
