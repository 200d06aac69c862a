"""Closed-form qubit and qutrit results used to cross-check the general machinery.

Qubit angle convention
----------------------
The general construction at ``d = 2`` uses ``U = exp(-i phi_1 sigma_z)``, so
its off-diagonal phases are ``exp(+-2 i phi_1)``. The textbook one-parameter
family ``E(phi) = exp(i phi sigma_z / 2) sigma_x exp(-i phi sigma_z / 2)``
has ``exp(+-i phi)``. The two agree exactly under ``phi = 2 phi_1``; see
:func:`qubit_phi_to_cartan`.
"""

from __future__ import annotations

import numpy as np

from .fourier import build_F
from .pauli import build_generator

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def qubit_phi_to_cartan(phi):
    """Map the textbook qubit phase ``phi`` to the general-path angle ``phi_1``."""
    return np.asarray(phi, dtype=float) / 2


def cartan_to_qubit_phi(phi1):
    return 2 * np.asarray(phi1, dtype=float)


def qubit_state(theta: float, chi: float) -> np.ndarray:
    return np.array([np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * chi)])


def qubit_E(phi: float) -> np.ndarray:
    """``cos(phi) sigma_x - sin(phi) sigma_y = [[0, e^{i phi}], [e^{-i phi}, 0]]``."""
    return np.array([[0, np.exp(1j * phi)], [np.exp(-1j * phi), 0]])


def qubit_E_rotated(phi: float) -> np.ndarray:
    """``exp(i phi sigma_z / 2) sigma_x exp(-i phi sigma_z / 2)``."""
    r = np.diag(np.exp(0.5j * phi * np.array([1, -1])))
    return r @ SIGMA_X @ r.conj().T


def _fourier_factorized(e_vec: np.ndarray, ops: list[np.ndarray]) -> np.ndarray:
    # sum_n e_n (F ops)_n
    f = build_F(len(ops))
    mixed = np.tensordot(f, np.stack(ops), axes=1)
    return np.tensordot(e_vec, mixed, axes=1)


def qubit_E_factorized(phi: float) -> np.ndarray:
    """``e(phi)^t F (sigma_x, sigma_x sigma_z)^t`` with ``e = (e^{-i phi}, e^{i phi}) / sqrt 2``."""
    e_vec = np.array([np.exp(-1j * phi), np.exp(1j * phi)]) / np.sqrt(2)
    return _fourier_factorized(e_vec, [SIGMA_X, SIGMA_X @ SIGMA_Z])


def qubit_expectation_closed_form(theta, chi, phi):
    """``<E(phi)> = sin(theta) cos(chi + phi)`` in the textbook qubit convention."""
    return np.sin(theta) * np.cos(chi + phi)


def bloch_vector(theta: float, phi: float) -> np.ndarray:
    return np.array([np.cos(phi) * np.sin(theta), np.sin(phi) * np.sin(theta), np.cos(theta)])


def bloch_operator(theta: float, phi: float) -> np.ndarray:
    """``n . sigma`` for the unit vector with polar angle ``theta`` and azimuth ``phi``."""
    nx, ny, nz = bloch_vector(theta, phi)
    return nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z


def bloch_complementary_theta(theta_a: float, phi_a: float, phi_b: float) -> float:
    """Polar angle in ``(0, pi)`` of the direction at azimuth ``phi_b`` orthogonal to ``n_A``.

    Solves ``cot(theta_B) = -tan(theta_A) cos(phi_B - phi_A)`` through atan2 so
    that ``theta_A`` near ``pi/2`` does not overflow the tangent.
    """
    num = -np.sin(theta_a) * np.cos(phi_b - phi_a)
    den = np.cos(theta_a)
    if den < 0:
        num, den = -num, -den
    return float(np.arctan2(den, num))


def qutrit_state(theta: float, xi: float, chi1: float, chi2: float) -> np.ndarray:
    s = np.sin(theta / 2)
    return np.array([
        np.cos(theta / 2),
        s * np.cos(xi / 2) * np.exp(1j * chi1),
        s * np.sin(xi / 2) * np.exp(1j * chi2),
    ])


def qutrit_E_closed_form(phi1: float, phi2: float) -> np.ndarray:
    """The explicit 3x3 matrix of ``E(phi_1, phi_2)``."""
    m = np.zeros((3, 3), dtype=complex)
    m[0, 2] = np.exp(1j * (phi1 + phi2))
    m[1, 0] = np.exp(-1j * (2 * phi1 - phi2))
    m[2, 1] = np.exp(1j * (phi1 - 2 * phi2))
    return m


def qutrit_E_factorized(phi1: float, phi2: float) -> np.ndarray:
    """``e(phi)^t F (X, XZ, XZ^2)^t``."""
    e_vec = np.array([
        np.exp(1j * (phi2 - 2 * phi1)),
        np.exp(1j * (phi1 + phi2)),
        np.exp(1j * (phi1 - 2 * phi2)),
    ]) / np.sqrt(3)
    return _fourier_factorized(e_vec, [build_generator(3, k) for k in (1, 2, 3)])


def qutrit_expectation_closed_form(theta, xi, chi1, chi2, phi1, phi2):
    a = 0.5 * np.sin(theta / 2) ** 2 * np.sin(xi) * np.exp(1j * ((chi1 - chi2) + (phi1 - 2 * phi2)))
    b = 0.5 * np.sin(theta) * (
        np.sin(xi / 2) * np.exp(1j * (chi2 + (phi1 + phi2)))
        + np.cos(xi / 2) * np.exp(-1j * (chi1 + (2 * phi1 - phi2)))
    )
    return a + b


def qutrit_two_level_expectation(theta, chi1, phi1, phi2):
    """``xi = 0`` limit: ``(1/2) sin(theta) exp(-i [chi_1 + (2 phi_1 - phi_2)])``."""
    return 0.5 * np.sin(theta) * np.exp(-1j * (chi1 + (2 * phi1 - phi2)))

