"""Phase operators complementary to the population inversions.

Angles ``phis`` are arrays whose last axis has length ``d - 1``; entry ``j``
multiplies the inversion ``h_j``. Most functions broadcast over leading axes,
so a whole grid of angles can be evaluated in one call.

Conventions::

    U(phi)   = exp(-i sum_j phi_j h_j)                 (diagonal)
    E^k(phi) = U(phi)^dagger X^k U(phi),  k = 1..d-1
    Pi(phi)  = [1 + sum_k <E^k(phi)>* X^k] / (2 pi)^(d-1)
    P(phi)   = [1 + sum_k <E^k(phi)>* <X^k>] / (2 pi)^(d-1)
    D(phi)   = [1 + sum_k gamma_k E^k(phi)] / (2 pi)^(d-1)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DimensionError, as_state, max_abs
from .pauli import build_X, cartan_coefficients, cartan_weights, check_dim

TWO_PI = 2 * np.pi

# grid points evaluated per vectorized batch
_CHUNK = 1 << 14


def phase_angles(phis, d: int | None = None) -> np.ndarray:
    """Validate angles and wrap them into ``[0, 2 pi)``.

    A scalar is accepted as the single angle of a qubit.
    """
    a = np.atleast_1d(np.asarray(phis, dtype=float))
    if not np.all(np.isfinite(a)):
        raise ValueError("phase angles must be finite")
    if d is not None and a.shape[-1] != d - 1:
        raise DimensionError(f"expected {d - 1} angle(s) for d={d}, got {a.shape[-1]}")
    check_dim(a.shape[-1] + 1)
    a = np.mod(a, TWO_PI)
    # mod can round a tiny negative angle up to exactly 2 pi
    a[a >= TWO_PI] = 0.0
    return a


def _norm(d: int) -> float:
    return TWO_PI ** (d - 1)


def phase_factors(phis) -> np.ndarray:
    """Diagonal of ``U(phi)``: ``U_s = exp(-i sum_j phi_j h_js)``, shape ``(..., d)``."""
    a = phase_angles(phis)
    d = a.shape[-1] + 1
    return np.exp(-1j * (a @ cartan_weights(d)))


def build_U(phis) -> np.ndarray:
    return np.diag(phase_factors(np.asarray(phis, dtype=float)).reshape(-1))


def _check_power(d: int, k: int) -> int:
    if int(k) != k or not 1 <= k <= d - 1:
        raise ValueError(f"power k must be in 1..{d - 1}, got {k}")
    return int(k)


def _shift_batch(u: np.ndarray, k: int) -> np.ndarray:
    # E^k has entry conj(u_{s+k}) u_s at (s+k, s); u has shape (..., d)
    d = u.shape[-1]
    s = np.arange(d)
    out = np.zeros(u.shape + (d,), dtype=complex)
    out[..., (s + k) % d, s] = np.conj(np.roll(u, -k, axis=-1)) * u
    return out


def build_E(phis, k: int = 1) -> np.ndarray:
    """``E^k(phi) = U^dagger X^k U``; broadcasts to shape ``(..., d, d)`` over angle grids."""
    u = phase_factors(phis)
    k = _check_power(u.shape[-1], k)
    return _shift_batch(u, k)


def expectation_E(state, phis, k: int = 1) -> np.ndarray | complex:
    """``<psi|E^k(phi)|psi> = sum_s c*_{s+k} c_s U*_{s+k} U_s`` without forming the matrix."""
    c = as_state(state, tol=1e-9)
    u = phase_factors(phis)
    d = u.shape[-1]
    if c.size != d:
        raise DimensionError(f"state has dimension {c.size}, angles imply d={d}")
    k = _check_power(d, k)
    a = c * u
    val = np.sum(np.conj(np.roll(a, -k, axis=-1)) * a, axis=-1)
    return complex(val) if val.ndim == 0 else val


def expectation_E_matrix(state, phis, k: int = 1) -> complex:
    """Same quantity as :func:`expectation_E` via the bilinear form with the full matrix."""
    c = as_state(state, tol=1e-9)
    e = build_E(phis, k)
    if e.shape[0] != c.size:
        raise DimensionError(f"state has dimension {c.size}, operator has {e.shape[0]}")
    return complex(np.vdot(c, e @ c))


def shift_expectation(state, k: int) -> complex:
    """``<psi|X^k|psi>``."""
    c = np.asarray(state, dtype=complex)
    return complex(np.vdot(np.roll(c, -k), c))


def build_kernel_Pi(state, phis) -> np.ndarray:
    c = as_state(state, tol=1e-9)
    d = c.size
    a = phase_angles(phis, d)
    x = build_X(d)
    xk = np.eye(d, dtype=complex)
    out = np.eye(d, dtype=complex)
    for k in range(1, d):
        xk = xk @ x
        out += np.conj(expectation_E(c, a, k)) * xk
    return out / _norm(d)


def moment_from_kernel(pi: np.ndarray, l: int) -> complex:
    """``(2 pi)^(d-1) / d * Tr[Pi X^l]``, which reproduces ``<E^l>``."""
    d = pi.shape[0]
    xl = np.linalg.matrix_power(build_X(d), l)
    return complex(_norm(d) / d * np.trace(pi @ xl))


def _density_terms(c: np.ndarray, angles: np.ndarray) -> np.ndarray:
    # unnormalized complex 1 + sum_k <E^k>* <X^k> at each row of angles
    d = c.size
    u = c * np.exp(-1j * (angles @ cartan_weights(d)))
    total = np.ones(u.shape[:-1], dtype=complex)
    for k in range(1, d):
        ek = np.sum(np.conj(np.roll(u, -k, axis=-1)) * u, axis=-1)
        total += np.conj(ek) * shift_expectation(c, k)
    return total


def phase_density(state, phis, imag_tol: float = 1e-10) -> np.ndarray | float:
    """``P(phi)`` at one point or over a broadcast grid of angles."""
    c = as_state(state, tol=1e-9)
    d = c.size
    total = _density_terms(c, phase_angles(phis, d)) / _norm(d)
    worst = float(np.max(np.abs(total.imag)))
    if worst >= imag_tol:
        raise ArithmeticError(f"phase distribution has imaginary residue {worst:.3e}")
    return float(total.real) if total.ndim == 0 else total.real


def grid_axis(n: int) -> np.ndarray:
    return TWO_PI * np.arange(n) / n


def iter_grid(d: int, n: int, chunk: int = _CHUNK):
    """Yield ``(start, angles)`` blocks covering the uniform ``n^(d-1)`` grid in lexicographic order."""
    axis = grid_axis(n)
    shape = (n,) * (d - 1)
    total = n ** (d - 1)
    for start in range(0, total, chunk):
        idx = np.unravel_index(np.arange(start, min(start + chunk, total)), shape)
        yield start, np.stack([axis[i] for i in idx], axis=-1)


@dataclass(frozen=True)
class PhaseDistribution:
    d: int
    grid_N: int
    values: np.ndarray
    max_imag: float

    @property
    def axis(self) -> np.ndarray:
        return grid_axis(self.grid_N)

    @property
    def riemann_sum(self) -> float:
        """Rectangle rule over the periodic cube; spectrally exact for these trigonometric polynomials."""
        return float(np.mean(self.values) * _norm(self.d))

    @property
    def min_value(self) -> float:
        return float(np.min(self.values))

    def points(self) -> np.ndarray:
        """All grid angles, shape ``(N^(d-1), d-1)``, in the same order as ``values.ravel()``."""
        return np.concatenate([a for _, a in iter_grid(self.d, self.grid_N)])


def phase_distribution(state, grid_N: int = 64, imag_tol: float = 1e-10) -> PhaseDistribution:
    c = as_state(state, tol=1e-9)
    d = check_dim(c.size)
    if grid_N < 8:
        raise ValueError(f"grid must have at least 8 points per axis, got {grid_N}")
    flat = np.empty(grid_N ** (d - 1))
    worst = 0.0
    for start, angles in iter_grid(d, grid_N):
        total = _density_terms(c, angles) / _norm(d)
        worst = max(worst, float(np.max(np.abs(total.imag))))
        flat[start:start + len(angles)] = total.real
    if worst >= imag_tol:
        raise ArithmeticError(f"phase distribution has imaginary residue {worst:.3e}")
    return PhaseDistribution(d, grid_N, flat.reshape((grid_N,) * (d - 1)), worst)


def _grid_mean_indicator(m: np.ndarray, grid_N: int) -> bool:
    # mean of exp(i m . phi) over the uniform grid: 1 when every m_j is a multiple of N, else 0
    return bool(np.all(np.mod(m, grid_N) == 0))


def riemann_sum_factorized(state, grid_N: int) -> float:
    """Rectangle-rule integral of ``P`` on the ``N^(d-1)`` grid without enumerating it.

    Every term of ``P`` is ``exp(i m . phi)`` for an integer vector ``m``, and its
    grid mean factorizes over axes, so the sum costs O(d^2) at any dimension.
    """
    c = as_state(state, tol=1e-9)
    d = check_dim(c.size)
    w = cartan_weights(d)
    total = 1.0 + 0j
    for k in range(1, d):
        xk = shift_expectation(c, k)
        for s in range(d):
            t = (s + k) % d
            if _grid_mean_indicator(w[:, t] - w[:, s], grid_N):
                total += xk * c[t] * np.conj(c[s])
    return float(total.real)


def povm_coefficients(d: int, gammas=None, tol: float = 1e-12) -> np.ndarray:
    """Validated ``gamma_1..gamma_(d-1)``; defaults to all ones.

    Hermiticity of the POVM element requires ``gamma_(d-k) == conj(gamma_k)``.
    """
    d = check_dim(d)
    if gammas is None:
        return np.ones(d - 1, dtype=complex)
    g = np.atleast_1d(np.asarray(gammas, dtype=complex))
    if g.shape != (d - 1,):
        raise ValueError(f"expected {d - 1} coefficient(s) for d={d}, got {g.size}")
    if not np.all(np.isfinite(g)):
        raise ValueError("coefficients must be finite")
    # index k-1 holds gamma_k, so gamma_(d-k) is g[::-1]
    bad = np.max(np.abs(g[::-1] - np.conj(g)))
    if bad >= tol:
        raise ValueError(f"coefficients violate gamma_(d-k) = conj(gamma_k) (residual {bad:.3e})")
    return g


def _delta_batch(u: np.ndarray, g: np.ndarray) -> np.ndarray:
    d = u.shape[-1]
    out = np.broadcast_to(np.eye(d, dtype=complex), u.shape[:-1] + (d, d)).copy()
    for k in range(1, d):
        out += g[k - 1] * _shift_batch(u, k)
    return out / _norm(d)


def build_povm_Delta(phis, gammas=None) -> np.ndarray:
    a = phase_angles(phis)
    d = a.shape[-1] + 1
    g = povm_coefficients(d, gammas)
    return _delta_batch(np.exp(-1j * (a @ cartan_weights(d))), g)


def povm_integral(d: int, gammas=None, grid_N: int = 16) -> np.ndarray:
    """Rectangle-rule integral of ``Delta(phi)`` over ``[0, 2 pi)^(d-1)``; should be the identity."""
    d = check_dim(d)
    g = povm_coefficients(d, gammas)
    acc = np.zeros((d, d), dtype=complex)
    for _, angles in iter_grid(d, grid_N):
        acc += _delta_batch(np.exp(-1j * (angles @ cartan_weights(d))), g).sum(axis=0)
    return acc * (TWO_PI / grid_N) ** (d - 1)


def povm_integral_factorized(d: int, gammas=None, grid_N: int = 16) -> np.ndarray:
    """Same sum as :func:`povm_integral`, evaluated term by term through the per-axis grid means."""
    d = check_dim(d)
    g = povm_coefficients(d, gammas)
    w = cartan_weights(d)
    acc = np.eye(d, dtype=complex)
    for k in range(1, d):
        for s in range(d):
            t = (s + k) % d
            if _grid_mean_indicator(w[:, t] - w[:, s], grid_N):
                acc[t, s] += g[k - 1]
    return acc


def povm_min_eigenvalue(d: int, gammas=None, grid_N: int = 32) -> float:
    """Smallest eigenvalue of ``Delta(phi)`` over the uniform grid (positivity diagnostic)."""
    d = check_dim(d)
    g = povm_coefficients(d, gammas)
    worst = np.inf
    for _, angles in iter_grid(d, grid_N):
        dl = _delta_batch(np.exp(-1j * (angles @ cartan_weights(d))), g)
        worst = min(worst, float(np.min(np.linalg.eigvalsh(dl))))
    return worst


def covariance_residual(phis, shift, gammas=None) -> float:
    """``|exp(i phi'.h) D(phi) exp(-i phi'.h) - D(phi + phi')|``, max-abs."""
    a = phase_angles(phis)
    b = phase_angles(shift, a.size + 1)
    w = build_U(b).conj()  # exp(+i sum phi'_j h_j)
    lhs = w @ build_povm_Delta(a, gammas) @ w.conj().T
    return max_abs(lhs - build_povm_Delta(a + b, gammas))


def cartan_angles(diagonal_unitary) -> tuple[float, np.ndarray]:
    """Write a diagonal unitary as ``exp(i alpha) U(phi)``.

    Returns ``(alpha, phi)`` with ``phi`` wrapped into ``[0, 2 pi)``.
    """
    m = np.asarray(diagonal_unitary, dtype=complex)
    dg = np.diag(m) if m.ndim == 2 else m
    theta = np.angle(dg)
    alpha = float(np.mean(theta))
    # U_s = exp(-i sum_j phi_j h_js) and sum_s (alpha - theta_s) = 0
    return alpha, phase_angles(cartan_coefficients(alpha - theta))

