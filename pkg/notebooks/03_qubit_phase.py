"""
Qubit phase operator
====================

At d = 2 the general construction gives E(phi) = cos(phi) sigma_x - sin(phi) sigma_y
once the single angle phi_1 is read as phi / 2.
"""

# %%
import numpy as np

from mubphase.closed_forms import (
    qubit_E,
    qubit_expectation_closed_form,
    qubit_phi_to_cartan,
    qubit_state,
)
from mubphase.phase import build_E, expectation_E, phase_distribution

phi = 0.9
print(np.abs(build_E([qubit_phi_to_cartan(phi)]) - qubit_E(phi)).max())

# %%
theta, chi = 1.2, 0.4
psi = qubit_state(theta, chi)
for phi in np.linspace(0, 2 * np.pi, 5):
    general = expectation_E(psi, [phi / 2])
    print(f"phi={phi:.3f}  <E>={general.real:+.6f}  closed form={qubit_expectation_closed_form(theta, chi, phi):+.6f}")

# %%
# the phase distribution peaks where cos(chi + 2 phi_1) is largest
dist = phase_distribution(psi, 64)
print("normalization:", dist.riemann_sum)
print("peak at phi_1 =", dist.axis[np.argmax(dist.values)], "expected", np.mod(-chi / 2, np.pi))
