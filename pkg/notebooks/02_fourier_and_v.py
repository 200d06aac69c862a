"""
Fourier and diagonal maps between the classes
=============================================

F carries Z to X. The diagonal V then walks X through XZ, XZ^2, ...
For d = 2 the same V lands on sigma_y instead of XZ.
"""

# %%
import numpy as np

from mubphase.closed_forms import SIGMA_X, SIGMA_Y
from mubphase.fourier import build_F, build_V
from mubphase.pauli import build_generator, build_X, build_Z

d = 7
F, V = build_F(d), build_V(d)
print("X - F'ZF:", np.abs(build_X(d) - F.conj().T @ build_Z(d) @ F).max())
print("F^4 - 1 :", np.abs(np.linalg.matrix_power(F, 4) - np.eye(d)).max())

# %%
Vk = np.eye(d)
for k in range(1, d):
    Vk = Vk @ V
    res = np.abs(build_generator(d, k + 1) - Vk.conj().T @ build_X(d) @ Vk).max()
    print(f"XZ^{k} = V'^{k} X V^{k}:", res)

# %%
V2 = build_V(2)
print(np.round(V2.conj().T @ SIGMA_X @ V2, 12))
print("sigma_y match:", np.abs(V2.conj().T @ SIGMA_X @ V2 - SIGMA_Y).max())
