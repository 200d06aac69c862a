"""
Covariant phase POVM and the polar alternative
==============================================

Delta(phi) integrates to the identity and moves covariantly under phase
shifts. Positivity depends on the coefficients gamma_k.
The polar route for a single transition is shown for contrast.
"""

# %%
import numpy as np

from mubphase.phase import covariance_residual, povm_integral, povm_min_eigenvalue

for d in (2, 3, 5):
    print(d, "integral - 1:", np.abs(povm_integral(d, None, 8) - np.eye(d)).max(),
          " min eigenvalue:", povm_min_eigenvalue(d, None, 8))
print("covariance:", covariance_residual([0.2, 1.1], [0.5, -0.3]))

# %%
# large coefficients break positivity, everything else survives
print("gamma = 3:", povm_min_eigenvalue(2, [3.0]))

# %%
from mubphase.polar import left_modulus, polar_phase_E12, polar_residuals, right_modulus

E12 = polar_phase_E12(np.exp(0.4j) * np.cos(0.3), np.sin(0.3) * np.exp(1.2j))
print("unitary:", np.abs(E12.conj().T @ E12 - np.eye(3)).max())
print(polar_residuals(E12))
print(np.real(right_modulus()).round(12))
print(np.real(left_modulus()).round(12))
