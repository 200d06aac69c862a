"""Small dense complex linear algebra.

Operators are plain ``numpy`` complex arrays of shape ``(d, d)`` and states
are complex vectors of length ``d``. Everything here is sized for
``2 <= d <= 31``.
"""

from __future__ import annotations

import numpy as np
from scipy import linalg as sla

MAX_DIM = 31

#: tolerance for identities built from exact roots of unity
ALGEBRAIC_TOL = 1e-12
#: tolerance for eigensolver-derived quantities
EIGEN_TOL = 1e-10

# eigenvalue phases closer than this are treated as one eigenspace
_CLUSTER_TOL = 1e-6
# first component with modulus above this fixes the vector phase
_PHASE_THRESHOLD = 1e-10


class DimensionError(ValueError):
    """Raised for mismatched, non-square or unsupported dimensions."""


class NotUnitaryError(ValueError):
    pass


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 2:
        raise DimensionError("matrix dimension must be at least 2")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def max_abs(a) -> float:
    """Entrywise max-abs norm, the residual measure used throughout."""
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def mat_mul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def unitarity_residual(a) -> float:
    a = as_matrix(a)
    return max_abs(a.conj().T @ a - np.eye(a.shape[0]))


def is_unitary(a, tol: float = ALGEBRAIC_TOL) -> bool:
    return unitarity_residual(a) < tol


def hermiticity_residual(a) -> float:
    a = as_matrix(a)
    return max_abs(a - a.conj().T)


def as_state(amplitudes, renormalize: bool = False, tol: float = ALGEBRAIC_TOL) -> np.ndarray:
    """Validate a state vector and return it as a complex array.

    With ``renormalize=True`` any nonzero vector is scaled to unit norm;
    otherwise the norm must already be 1 within ``tol``.
    """
    c = np.asarray(amplitudes, dtype=complex)
    if c.ndim != 1 or c.size < 2:
        raise DimensionError(f"expected a vector of length >= 2, got shape {c.shape}")
    if not np.all(np.isfinite(c)):
        raise ValueError("state has non-finite amplitudes")
    norm = np.linalg.norm(c)
    if renormalize:
        if norm == 0:
            raise ValueError("cannot renormalize the zero vector")
        return c / norm
    if abs(norm**2 - 1) >= tol:
        raise ValueError(f"state is not normalized (norm^2 = {norm**2:.15g})")
    return c


def basis_state(d: int, n: int) -> np.ndarray:
    e = np.zeros(d, dtype=complex)
    e[n % d] = 1
    return e


def fix_phase(v: np.ndarray, threshold: float = _PHASE_THRESHOLD) -> np.ndarray:
    """Normalize ``v`` and rotate it so its first non-negligible entry is real positive."""
    v = np.asarray(v, dtype=complex)
    v = v / np.linalg.norm(v)
    idx = np.flatnonzero(np.abs(v) > threshold)
    if idx.size:
        lead = v[idx[0]]
        v = v * (abs(lead) / lead)
        v[idx[0]] = abs(lead)
    return v


def _canonical_eigenspace(q: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis for the span of the columns of ``q``.

    Projects computational basis vectors onto the subspace in index order and
    Gram-Schmidts them, so the result does not depend on the solver's choice
    of basis inside a degenerate eigenspace.
    """
    m = q.shape[1]
    if m == 1:
        return q
    proj = q @ q.conj().T
    out: list[np.ndarray] = []
    for n in range(q.shape[0]):
        v = proj[:, n].copy()
        for w in out:
            v -= np.vdot(w, v) * w
        # twice is enough for orthogonality at this size
        for w in out:
            v -= np.vdot(w, v) * w
        nrm = np.linalg.norm(v)
        if nrm > 1e-6:
            out.append(v / nrm)
        if len(out) == m:
            break
    return np.column_stack(out)


def eig_unitary(a, tol: float = EIGEN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a unitary matrix with a reproducible convention.

    Returns ``(values, vectors)`` with eigenvectors as columns, like
    :func:`numpy.linalg.eig`, but

    * the vectors are orthonormal even inside degenerate eigenspaces,
    * each vector's first entry with modulus above 1e-10 is real positive,
    * pairs are sorted by eigenvalue phase in ``[0, 2*pi)``.

    The complex Schur form of a normal matrix is diagonal, which gives an
    orthonormal eigenbasis directly.
    """
    a = as_matrix(a)
    res = unitarity_residual(a)
    if res >= tol:
        raise NotUnitaryError(f"matrix is not unitary (residual {res:.3e})")
    try:
        t, q = sla.schur(a, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise np.linalg.LinAlgError(f"eigensolver failed: {exc}") from exc

    angles = np.mod(np.angle(np.diag(t)), 2 * np.pi)
    angles[angles > 2 * np.pi - _CLUSTER_TOL] = 0.0
    order = np.argsort(angles, kind="stable")

    clusters: list[list[int]] = []
    for i in order:
        if clusters and angles[i] - angles[clusters[-1][-1]] < _CLUSTER_TOL:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    vectors = []
    for idx in clusters:
        block = _canonical_eigenspace(q[:, idx])
        vectors.extend(fix_phase(block[:, j]) for j in range(block.shape[1]))
    vecs = np.column_stack(vectors)
    # Rayleigh quotients are accurate to round-off for normal matrices
    vals = np.einsum("ij,ik,kj->j", vecs.conj(), a, vecs)
    return vals, vecs


def eig_reconstruct(values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    return (vectors * values) @ vectors.conj().T


def psd_sqrt(a) -> np.ndarray:
    """Positive square root of a Hermitian positive semidefinite matrix."""
    a = as_matrix(a)
    w, v = np.linalg.eigh((a + a.conj().T) / 2)
    return (v * np.sqrt(np.clip(w, 0, None))) @ v.conj().T
