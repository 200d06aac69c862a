"""Generalized Pauli operators, commuting classes and Cartan generators.

Index arithmetic is mod ``d`` everywhere. Class labels run over ``0..d``
(``d + 1`` classes): label 0 is ``Z``, label ``k >= 1`` is ``X Z^(k-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import MAX_DIM, DimensionError, max_abs
from .reports import Check


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def check_dim(d) -> int:
    """Return ``d`` as an int, raising ``DimensionError`` unless it is a prime <= 31."""
    if isinstance(d, bool) or int(d) != d:
        raise DimensionError(f"dimension must be an integer, got {d!r}")
    d = int(d)
    if not is_prime(d):
        raise DimensionError(f"dimension must be prime, got {d}")
    if d > MAX_DIM:
        raise DimensionError(f"dimension {d} exceeds the supported maximum {MAX_DIM}")
    return d


@lru_cache(maxsize=None)
def _roots(d: int) -> np.ndarray:
    w = np.exp(2j * np.pi * np.arange(d) / d)
    # sin(pi) and friends are not exactly zero in floating point
    w.real[np.abs(w.real) < 1e-15] = 0.0
    w.imag[np.abs(w.imag) < 1e-15] = 0.0
    w.flags.writeable = False
    return w


def omega_power(d: int, m) -> np.ndarray | complex:
    """``omega**m`` with ``omega = exp(2 pi i / d)``, looked up from the table of roots.

    ``m`` may be an integer array; exponents are reduced mod ``d`` first.
    """
    out = _roots(d)[np.mod(m, d)]
    return complex(out) if np.ndim(out) == 0 else out


def _cyclic(d: int, weights: np.ndarray, shift: int = 1) -> np.ndarray:
    # entry (n + shift, n) = weights[n]
    m = np.zeros((d, d), dtype=complex)
    n = np.arange(d)
    m[(n + shift) % d, n] = weights
    return m


def build_Z(d: int) -> np.ndarray:
    d = check_dim(d)
    return np.diag(omega_power(d, np.arange(d)))


def build_X(d: int) -> np.ndarray:
    d = check_dim(d)
    return _cyclic(d, np.ones(d))


def _check_label(d: int, k: int) -> int:
    if int(k) != k or not 0 <= k <= d:
        raise ValueError(f"class label must be in 0..{d}, got {k}")
    return int(k)


def build_generator(d: int, k: int) -> np.ndarray:
    """``Z`` for ``k == 0``, else ``X @ Z**(k-1)``."""
    d = check_dim(d)
    k = _check_label(d, k)
    if k == 0:
        return build_Z(d)
    # (X Z^m)|n> = omega^(m n) |n+1>
    return _cyclic(d, omega_power(d, (k - 1) * np.arange(d)))


def generator_name(k: int) -> str:
    if k == 0:
        return "Z"
    if k == 1:
        return "X"
    if k == 2:
        return "XZ"
    return f"XZ^{k - 1}"


@dataclass(frozen=True)
class OperatorClass:
    """The ``d - 1`` commuting powers of one generator, ``members[j]`` being power ``j + 1``."""

    d: int
    label: int
    members: tuple[np.ndarray, ...]

    @property
    def generator(self) -> np.ndarray:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def max_commutator(self) -> float:
        worst = 0.0
        for i, a in enumerate(self.members):
            for b in self.members[i + 1:]:
                worst = max(worst, max_abs(a @ b - b @ a))
        return worst


def build_class(d: int, k: int) -> OperatorClass:
    g = build_generator(d, k)
    members = [g]
    for _ in range(d - 2):
        members.append(members[-1] @ g)
    return OperatorClass(d=d, label=k, members=tuple(members))


def build_set_S(d: int) -> list[np.ndarray]:
    """The ``d + 1`` multicomplementary generators ``Z, X, XZ, ..., XZ^(d-1)``."""
    d = check_dim(d)
    return [build_generator(d, k) for k in range(d + 1)]


def build_Sij(d: int, i: int, j: int) -> np.ndarray:
    """Transition operator ``|i><j|`` (0-based indices)."""
    d = check_dim(d)
    if not (0 <= i < d and 0 <= j < d):
        raise IndexError(f"indices ({i}, {j}) out of range for d={d}")
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1
    return m


def cartan_weights(d: int) -> np.ndarray:
    """Real ``(d-1, d)`` array whose row ``j`` is the diagonal of ``h_j``."""
    w = np.zeros((d - 1, d))
    j = np.arange(d - 1)
    w[j, j] = 1
    w[j, j + 1] = -1
    return w


def build_h(d: int, j: int) -> np.ndarray:
    """Inversion ``h_j = S_jj - S_(j+1)(j+1)``, for ``0 <= j <= d - 2``."""
    d = check_dim(d)
    if not 0 <= j <= d - 2:
        raise IndexError(f"inversion index must be in 0..{d - 2}, got {j}")
    return np.diag(cartan_weights(d)[j]).astype(complex)


def cartan_coefficients(diagonal) -> np.ndarray:
    """Coefficients ``a`` with ``diag(diagonal) == sum_j a_j h_j``.

    The diagonal must be traceless; a nonzero trace cannot be expanded in the
    inversions and raises ``ValueError``.
    """
    dg = np.asarray(diagonal)
    total = np.sum(dg)
    if abs(total) > 1e-9 * max(1.0, float(np.max(np.abs(dg)))):
        raise ValueError(f"diagonal is not traceless (trace {total})")
    # h_j puts +a_j at j and -a_j at j+1, so a is the running sum
    return np.cumsum(dg)[:-1]


def weyl_check(d: int) -> Check:
    """Residual of ``Z X - omega X Z``."""
    d = check_dim(d)
    x, z = build_X(d), build_Z(d)
    res = max_abs(z @ x - omega_power(d, 1) * (x @ z))
    return Check(f"weyl ZX = wXZ (d={d})", res, 1e-12)
