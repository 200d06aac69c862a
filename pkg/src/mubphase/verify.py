"""Full invariant suite for one prime dimension."""

from __future__ import annotations

import numpy as np

from .fourier import build_V, verify_fourier_pair
from .linalg import hermiticity_residual, max_abs, unitarity_residual
from .mub import build_mubs, class_diagonalization_residual, mubs_via_v, unbiasedness_report
from .pauli import build_class, build_h, check_dim, weyl_check
from .phase import (
    build_E,
    build_kernel_Pi,
    build_povm_Delta,
    build_U,
    cartan_angles,
    covariance_residual,
    expectation_E,
    expectation_E_matrix,
    moment_from_kernel,
    phase_distribution,
    povm_integral,
    povm_integral_factorized,
    riemann_sum_factorized,
)
from .reports import Check, Report

# upper bound on grid points for the quadrature checks
GRID_BUDGET = 1 << 18


def random_state(d: int, rng: np.random.Generator) -> np.ndarray:
    c = rng.normal(size=d) + 1j * rng.normal(size=d)
    return c / np.linalg.norm(c)


def random_angles(d: int, rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(0, 2 * np.pi, size=d - 1)


def largest_grid(d: int, lo: int, hi: int, budget: int = GRID_BUDGET) -> int | None:
    """Largest per-axis count in ``[lo, hi]`` whose full grid fits the budget, or None."""
    for n in range(hi, lo - 1, -1):
        if n ** (d - 1) <= budget:
            return n
    return None


def pauli_checks(d: int) -> list[Check]:
    checks = [weyl_check(d)]
    comm = trace = unit = power = 0.0
    for k in range(d + 1):
        cls = build_class(d, k)
        comm = max(comm, cls.max_commutator())
        for j, m in enumerate(cls.members, start=1):
            trace = max(trace, abs(np.trace(m)))
            unit = max(unit, unitarity_residual(m))
            power = max(power, max_abs(m - np.linalg.matrix_power(cls.generator, j)))
    checks += [
        Check("class members commute", comm, 1e-12),
        Check("class members traceless", trace, 1e-12),
        Check("class members unitary", unit, 1e-12),
        Check("class member j is generator^j", power, 1e-12),
    ]
    return checks


def mub_checks(d: int) -> tuple[list[Check], dict]:
    mubs = build_mubs(d)
    rep = unbiasedness_report(mubs)
    ortho = max(b.orthonormality_residual() for b in mubs)
    checks = [
        Check(f"basis count = d+1 = {d + 1}", float(abs(len(mubs) - (d + 1))), 0.5),
        Check("bases orthonormal", ortho, 1e-10),
        Check("cross overlaps |<a|b>|^2 = 1/d", rep.max_deviation, rep.tolerance),
        Check("each basis diagonalizes its class", class_diagonalization_residual(mubs), 1e-9),
    ]
    if d > 2:
        alt = mubs_via_v(d)
        worst = 0.0
        for a, b in zip(mubs, alt):
            ov = np.abs(np.einsum("ij,ij->j", a.vectors.conj(), b.vectors))
            worst = max(worst, float(np.max(np.abs(ov - 1))))
        checks.append(Check("eigensolver route = V-conjugation route", worst, 1e-9))
    diag = {"max_overlap_deviation": rep.max_deviation, "worst_pair": list(rep.worst_pair)}
    return checks, diag


def phase_checks(d: int, rng: np.random.Generator, samples: int = 20) -> list[Check]:
    unit = group = dagger = inv = paths = moment = herm = cov = 0.0
    hs = [build_h(d, j) for j in range(d - 1)]
    for _ in range(samples):
        phis = random_angles(d, rng)
        e1 = build_E(phis, 1)
        ek = np.eye(d, dtype=complex)
        for k in range(1, d):
            ek = ek @ e1
            e = build_E(phis, k)
            unit = max(unit, unitarity_residual(e))
            group = max(group, max_abs(e - ek))
            dagger = max(dagger, max_abs(build_E(phis, d - k) - e.conj().T))
        u = build_U(phis)
        inv = max(inv, max(max_abs(u.conj().T @ h @ u - h) for h in hs))
        psi = random_state(d, rng)
        pi = build_kernel_Pi(psi, phis)
        for l in range(1, d):
            val = expectation_E(psi, phis, l)
            paths = max(paths, abs(val - expectation_E_matrix(psi, phis, l)))
            moment = max(moment, abs(moment_from_kernel(pi, l) - val))
        herm = max(herm, hermiticity_residual(build_povm_Delta(phis)))
        cov = max(cov, covariance_residual(phis, random_angles(d, rng)))
    return [
        Check("E^k unitary", unit, 1e-11),
        Check("E^k = (E^1)^k", group, 1e-11),
        Check("E^(d-k) = (E^k)^dagger", dagger, 1e-11),
        Check("U^dagger h_j U = h_j", inv, 1e-12),
        Check("<E^k> sum formula = bilinear form", paths, 1e-11),
        Check("moment identity from kernel", moment, 1e-10),
        Check("POVM element Hermitian", herm, 1e-11),
        Check("POVM covariance under phase shifts", cov, 1e-11),
    ]


def quadrature_checks(d: int, rng: np.random.Generator) -> list[Check]:
    """Grid normalization of ``P`` and grid resolution of identity by the POVM.

    Grids too large to enumerate fall back to the factorized evaluation of the
    same rectangle-rule sum.
    """
    psi = random_state(d, rng)
    n = largest_grid(d, 8, 64)
    if n is None:
        total, note = riemann_sum_factorized(psi, 64), "N=64, factorized"
    else:
        total, note = phase_distribution(psi, n).riemann_sum, f"N={n}"
    checks = [Check("phase distribution normalization", abs(total - 1), 1e-6, note=note)]
    n = largest_grid(d, 8, 16, GRID_BUDGET >> 2)
    if n is None:
        integral, note = povm_integral_factorized(d, None, 16), "N=16, factorized"
    else:
        integral, note = povm_integral(d, None, n), f"N={n}"
    checks.append(Check("POVM resolves identity", max_abs(integral - np.eye(d)), 1e-6, note=note))
    return checks


def v_checks(d: int) -> list[Check]:
    if d == 2:
        return []
    v = build_V(d)
    alpha, phis = cartan_angles(v)
    return [Check("V = exp(i a) U(phi) for some phi", max_abs(np.exp(1j * alpha) * build_U(phis) - v), 1e-11)]


def verify_dimension(d: int, seed: int = 0) -> Report:
    d = check_dim(d)
    rng = np.random.default_rng(seed)
    report = Report("verify", d)
    report.extend(pauli_checks(d))
    report.extend(verify_fourier_pair(d))
    report.extend(v_checks(d))
    checks, diag = mub_checks(d)
    report.extend(checks)
    report.diagnostics.update(diag)
    report.extend(phase_checks(d, rng))
    report.extend(quadrature_checks(d, rng))
    if d == 2:
        report.diagnostics["note"] = "d=2: V maps sigma_x onto sigma_y = i XZ, not onto XZ"
    return report
