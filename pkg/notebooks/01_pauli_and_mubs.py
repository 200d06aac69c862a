"""
Clock, shift and mutually unbiased bases
========================================

Build the shift X and clock Z for a prime dimension, check the Weyl
relation, then collect the eigenbases of Z, X, XZ, ..., XZ^(d-1).
"""

# %%
import numpy as np

from mubphase.mub import build_mubs, unbiasedness_report
from mubphase.pauli import build_set_S, build_X, build_Z, generator_name

d = 5
w = np.exp(2j * np.pi / d)
X, Z = build_X(d), build_Z(d)
print("ZX - wXZ:", np.abs(Z @ X - w * X @ Z).max())

# %%
# d + 1 generators, one per operator class
for k, g in enumerate(build_set_S(d)):
    print(k, generator_name(k), "trace", np.round(np.trace(g), 12))

# %%
mubs = build_mubs(d)
rep = unbiasedness_report(mubs)
print(len(mubs), "bases, worst ||<a|b>|^2 - 1/d| =", rep.max_deviation)

# overlaps between the Z basis and the XZ basis are all 1/d
print(np.round(np.abs(mubs[0].vectors.conj().T @ mubs[2].vectors) ** 2, 12))
