"""Finite Fourier transform ``F`` and the diagonal map ``V``.

``F`` exchanges the clock and shift operators, ``X = F^dagger Z F``, and
``V`` walks ``X`` through the remaining generators, ``X Z^k = V^dagger^k X V^k``
(odd primes). At ``d = 2`` no unitary maps ``sigma_x`` onto ``X Z`` itself;
``V = diag(1, -i)`` maps it onto ``sigma_y = i X Z`` instead.
"""

from __future__ import annotations

import numpy as np

from .linalg import DimensionError, as_matrix, is_unitary, max_abs, NotUnitaryError
from .pauli import build_generator, build_X, build_Z, check_dim, omega_power
from .reports import Check

FOURIER_TOL = 1e-11


def build_F(d: int) -> np.ndarray:
    """Unitary DFT matrix with entries ``omega**(n n') / sqrt(d)``."""
    d = check_dim(d)
    n = np.arange(d)
    return omega_power(d, np.outer(n, n)) / np.sqrt(d)


def v_exponents(d: int) -> np.ndarray:
    """Integer exponents ``-(n^2 - n)(d + 1)/2 mod d`` of the diagonal of ``V`` (odd ``d``)."""
    n = np.arange(d, dtype=np.int64)
    return np.mod(-(n * n - n) * ((d + 1) // 2), d)


def build_V(d: int) -> np.ndarray:
    d = check_dim(d)
    if d == 2:
        return np.diag([1, -1j]).astype(complex)
    return np.diag(omega_power(d, v_exponents(d)))


def conjugate(a, u) -> np.ndarray:
    """``u^dagger a u``."""
    a, u = as_matrix(a), as_matrix(u)
    if a.shape != u.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {u.shape[0]}")
    if not is_unitary(u, 1e-10):
        raise NotUnitaryError("conjugating matrix is not unitary")
    return u.conj().T @ a @ u


def verify_fourier_pair(d: int) -> list[Check]:
    """Residuals of ``X - F^dagger Z F``, ``F^4 - 1`` and the ``V`` conjugations."""
    d = check_dim(d)
    f, x, z = build_F(d), build_X(d), build_Z(d)
    checks = [
        Check(f"X = F'ZF (d={d})", max_abs(x - conjugate(z, f)), FOURIER_TOL),
        Check(f"F^4 = 1 (d={d})", max_abs(np.linalg.matrix_power(f, 4) - np.eye(d)), FOURIER_TOL),
        Check(f"F unitary (d={d})", max_abs(f.conj().T @ f - np.eye(d)), 1e-12),
    ]
    v = build_V(d)
    if d == 2:
        sigma_y = 1j * (x @ z)
        checks.append(Check(
            "sigma_y = V'XV (d=2)", max_abs(sigma_y - conjugate(x, v)), FOURIER_TOL,
            note="no unitary maps X onto XZ at d=2; target is sigma_y = i XZ",
        ))
        return checks
    worst = 0.0
    vk = np.eye(d, dtype=complex)
    for k in range(1, d):
        vk = vk @ v
        worst = max(worst, max_abs(build_generator(d, k + 1) - conjugate(x, vk)))
    checks.append(Check(f"XZ^k = V'^k X V^k, k=1..{d - 1} (d={d})", worst, FOURIER_TOL))
    return checks
