"""Mutually unbiased bases as eigenbases of the multicomplementary generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .fourier import build_V
from .linalg import as_matrix, eig_unitary, fix_phase
from .pauli import build_class, build_set_S, build_X, build_Z, check_dim

UNBIASED_TOL = 1e-9


@dataclass(frozen=True)
class OrthonormalBasis:
    """Basis vectors stored as the columns of ``vectors``, ordered by eigenvalue phase."""

    label: int
    vectors: np.ndarray
    eigenvalues: np.ndarray

    @property
    def d(self) -> int:
        return self.vectors.shape[0]

    def orthonormality_residual(self) -> float:
        g = self.vectors.conj().T @ self.vectors
        return float(np.max(np.abs(g - np.eye(self.d))))


@dataclass(frozen=True)
class MubCollection:
    d: int
    bases: tuple[OrthonormalBasis, ...]

    def __len__(self) -> int:
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def __getitem__(self, k: int) -> OrthonormalBasis:
        return self.bases[k]


def eigenbasis_of(op, label: int = 0) -> OrthonormalBasis:
    vals, vecs = eig_unitary(as_matrix(op))
    return OrthonormalBasis(label=label, vectors=vecs, eigenvalues=vals)


def build_mubs(d: int) -> MubCollection:
    """The ``d + 1`` eigenbases of ``Z, X, XZ, ..., XZ^(d-1)`` in label order."""
    d = check_dim(d)
    ops = build_set_S(d)
    return MubCollection(d=d, bases=tuple(eigenbasis_of(op, k) for k, op in enumerate(ops)))


def mubs_via_v(d: int) -> MubCollection:
    """Same collection built by applying powers of ``V^dagger`` to the ``X`` eigenbasis.

    Only valid for odd primes. Vectors agree with :func:`build_mubs` up to a
    global phase each, since ``V^dagger^m`` preserves the eigenvalue.
    """
    d = check_dim(d)
    if d == 2:
        raise ValueError("the V route needs an odd prime; at d=2 V maps X onto sigma_y")
    xb = eigenbasis_of(build_X(d), 1)
    vdag = build_V(d).conj().T
    bases = [eigenbasis_of(build_Z(d), 0), xb]
    vecs = xb.vectors
    for k in range(2, d + 1):
        vecs = vdag @ vecs
        fixed = np.column_stack([fix_phase(vecs[:, j]) for j in range(d)])
        bases.append(OrthonormalBasis(label=k, vectors=fixed, eigenvalues=xb.eigenvalues))
    return MubCollection(d=d, bases=tuple(bases))


@dataclass
class UnbiasednessReport:
    d: int
    overlaps: dict[tuple[int, int], np.ndarray] = field(repr=False)
    max_deviation: float
    worst_pair: tuple[int, int] | None
    tolerance: float = UNBIASED_TOL

    @property
    def passed(self) -> bool:
        return bool(np.isfinite(self.max_deviation) and self.max_deviation < self.tolerance)


def overlap_matrix(a: OrthonormalBasis, b: OrthonormalBasis) -> np.ndarray:
    """``|<a_i|b_j>|^2`` for all vector pairs."""
    return np.abs(a.vectors.conj().T @ b.vectors) ** 2


def unbiasedness_report(c: MubCollection, tol: float = UNBIASED_TOL) -> UnbiasednessReport:
    """Overlap-squared matrices for every pair of distinct bases and their worst deviation from 1/d."""
    overlaps = {}
    worst, worst_pair = 0.0, None
    for i, j in combinations(range(len(c)), 2):
        m = overlap_matrix(c[i], c[j])
        overlaps[(i, j)] = m
        dev = float(np.max(np.abs(m - 1.0 / c.d)))
        if dev > worst or worst_pair is None:
            worst, worst_pair = dev, (i, j)
    return UnbiasednessReport(c.d, overlaps, worst, worst_pair, tol)


def class_diagonalization_residual(c: MubCollection) -> float:
    """Largest ``|M v - (v'Mv) v|`` over every class member ``M`` and vector ``v`` of its basis."""
    worst = 0.0
    for basis in c:
        for m in build_class(c.d, basis.label).members:
            mv = m @ basis.vectors
            rayleigh = np.einsum("ij,ij->j", basis.vectors.conj(), mv)
            worst = max(worst, float(np.max(np.abs(mv - basis.vectors * rayleigh))))
    return worst
