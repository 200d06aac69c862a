"""Polar-decomposition phase operator for the 1 <-> 2 transition of a qutrit.

With ``S_ij = |i><j|`` (levels labelled 1..3, stored 0-based), the transition
operator factors as ``S_12 = E_12 R`` where ``R = sqrt(S_21 S_12)`` is the
right (column-space) modulus. The left modulus ``sqrt(S_12 S_21)`` does not
satisfy that factorization; :func:`polar_residuals` reports both.
"""

from __future__ import annotations

import numpy as np

from .linalg import max_abs, psd_sqrt
from .pauli import build_Sij

S12 = build_Sij(3, 0, 1)
S21 = build_Sij(3, 1, 0)


def polar_phase_E12(x: complex, y: complex, tol: float = 1e-12) -> np.ndarray:
    """``[[0, 1, 0], [x, 0, y], [y*, 0, -x*]]`` for ``|x|^2 + |y|^2 = 1``.

    ``y = 0, x = exp(i phi_12)`` confines the operator to the su(2) subspace
    spanned by levels 1 and 2.
    """
    x, y = complex(x), complex(y)
    if abs(abs(x) ** 2 + abs(y) ** 2 - 1) >= tol:
        raise ValueError(f"|x|^2 + |y|^2 must be 1, got {abs(x) ** 2 + abs(y) ** 2!r}")
    return np.array([
        [0, 1, 0],
        [x, 0, y],
        [y.conjugate(), 0, -x.conjugate()],
    ], dtype=complex)


def right_modulus() -> np.ndarray:
    return psd_sqrt(S21 @ S12)


def left_modulus() -> np.ndarray:
    return psd_sqrt(S12 @ S21)


def polar_residuals(e12: np.ndarray) -> dict[str, float]:
    """Residuals of ``E_12 R - S_12`` for the right and the left modulus."""
    return {
        "right": max_abs(e12 @ right_modulus() - S12),
        "left": max_abs(e12 @ left_modulus() - S12),
    }
