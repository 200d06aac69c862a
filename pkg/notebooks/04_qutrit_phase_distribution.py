"""
Qutrit phase distribution
=========================

Two phase angles. For states with no population in the top level the
distribution only depends on 2 phi_1 - phi_2.
"""

# %%
import numpy as np

from mubphase.closed_forms import qutrit_expectation_closed_form, qutrit_state
from mubphase.phase import expectation_E, phase_distribution

theta, xi, chi1, chi2 = 1.0, 0.7, 0.3, 2.1
psi = qutrit_state(theta, xi, chi1, chi2)
p1, p2 = 0.5, 1.9
print(expectation_E(psi, [p1, p2]))
print(qutrit_expectation_closed_form(theta, xi, chi1, chi2, p1, p2))

# %%
dist = phase_distribution(psi, 64)
print("riemann sum", dist.riemann_sum, "min", dist.min_value, "imag", dist.max_imag)

# %%
two_level = qutrit_state(theta, 0.0, chi1, chi2)
vals = phase_distribution(two_level, 64).values
i, j = np.indices(vals.shape)
line = np.mod(2 * i - j, 64)
print("spread along lines:", max(np.ptp(vals[line == c]) for c in range(64)))
print("spread across lines:", np.ptp(vals))
