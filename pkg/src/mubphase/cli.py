"""Command-line front end.

Usage::

    mubphase verify 5
    mubphase mubs 3 --format csv -o mubs3.csv
    mubphase phase-dist state.json --grid 32 -o p.csv
    mubphase expectation state.json --k 1 --phi 0.3,1.2
    mubphase --qubit-convention paper expectation qubit.json --k 1 --phi 0
    mubphase povm-check 3 --gamma 1,1

Exit status: 0 when every check passes, 1 when a check fails, 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from . import io
from .closed_forms import qubit_phi_to_cartan
from .linalg import DimensionError, hermiticity_residual, max_abs
from .mub import build_mubs, unbiasedness_report
from .pauli import check_dim
from .phase import (
    PhaseDistribution,
    build_povm_Delta,
    covariance_residual,
    expectation_E,
    expectation_E_matrix,
    grid_axis,
    phase_density,
    phase_distribution,
    povm_coefficients,
    povm_integral,
    povm_integral_factorized,
    povm_min_eigenvalue,
)
from .reports import Check, Report
from .verify import GRID_BUDGET, largest_grid, random_angles, verify_dimension

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(Path(path), "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dim(value: str) -> int:
    try:
        return check_dim(int(value))
    except (ValueError, DimensionError) as exc:
        raise UsageError(str(exc)) from exc


def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"{what}: expected comma-separated numbers, got {text!r}") from exc


def _textbook_qubit(args, d: int) -> bool:
    return args.qubit_convention == "paper" and d == 2


def cmd_verify(args) -> int:
    d = _dim(args.d)
    t0 = time.perf_counter()
    report = verify_dimension(d, seed=args.seed)
    elapsed = time.perf_counter() - t0 if args.timing else None
    _emit(io.dumps(io.report_document(report, elapsed)), args.output)
    for c in report.failures():
        print(c.line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_mubs(args) -> int:
    mubs = build_mubs(_dim(args.d))
    if args.format == "csv":
        text = io.mubs_csv(mubs)
    else:
        text = io.dumps(io.mubs_document(mubs))
    _emit(text, args.output)
    return EXIT_OK if unbiasedness_report(mubs).passed else EXIT_FAIL


def cmd_phase_dist(args) -> int:
    state = io.read_state_file(args.state, renormalize=args.renormalize)
    if args.grid < 8:
        raise UsageError(f"--grid must be at least 8, got {args.grid}")
    if _textbook_qubit(args, state.size):
        # textbook qubit angle phi is 2 phi_1; sample P at phi_1 = phi / 2
        axis = grid_axis(args.grid)
        values = phase_density(state, qubit_phi_to_cartan(axis)[:, None])
        dist = PhaseDistribution(2, args.grid, values, 0.0)
    else:
        dist = phase_distribution(state, args.grid)
    _emit(io.phase_distribution_csv(dist), args.output)
    return EXIT_OK


def cmd_expectation(args) -> int:
    state = io.read_state_file(args.state, renormalize=args.renormalize)
    d = state.size
    phis = _floats(args.phi, "--phi")
    if len(phis) != d - 1:
        raise UsageError(f"--phi needs {d - 1} angle(s) for d={d}, got {len(phis)}")
    if not 1 <= args.k <= d - 1:
        raise UsageError(f"--k must be in 1..{d - 1}, got {args.k}")
    if _textbook_qubit(args, d):
        phis = list(qubit_phi_to_cartan(phis))
    val = expectation_E(state, phis, args.k)
    alt = expectation_E_matrix(state, phis, args.k)
    if abs(val - alt) >= 1e-11:
        print(f"error: expectation paths disagree ({val} vs {alt})", file=sys.stderr)
        return EXIT_FAIL
    print(f"re={io.fmt_float(val.real)} im={io.fmt_float(val.imag)}")
    return EXIT_OK


def cmd_povm_check(args) -> int:
    d = _dim(args.d)
    gammas = None
    if args.gamma is not None:
        try:
            gammas = [complex(t.strip()) for t in args.gamma.split(",") if t.strip()]
        except ValueError as exc:
            raise UsageError(f"--gamma: expected comma-separated complex numbers ({exc})") from exc
    try:
        g = povm_coefficients(d, gammas)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rng = np.random.default_rng(args.seed)
    herm = cov = 0.0
    for _ in range(20):
        phis = random_angles(d, rng)
        herm = max(herm, hermiticity_residual(build_povm_Delta(phis, g)))
        cov = max(cov, covariance_residual(phis, random_angles(d, rng), g))
    report = Report("povm-check", d)
    report.extend([
        Check("POVM element Hermitian", herm, 1e-11),
        Check("POVM covariance under phase shifts", cov, 1e-11),
    ])
    n = args.grid if args.grid ** (d - 1) <= GRID_BUDGET else None
    if n is None:
        integral, note = povm_integral_factorized(d, g, args.grid), f"N={args.grid}, factorized"
    else:
        integral, note = povm_integral(d, g, n), f"N={n}"
    report.checks.append(Check("POVM resolves identity", max_abs(integral - np.eye(d)), 1e-6, note=note))

    # positivity is reported, never asserted
    scan_n = args.grid if args.grid ** (d - 1) <= GRID_BUDGET else largest_grid(d, 1, args.grid)
    report.diagnostics["gammas"] = [[z.real, z.imag] for z in g]
    report.diagnostics["positivity_grid_N"] = scan_n
    min_eig = povm_min_eigenvalue(d, g, scan_n)
    report.diagnostics["min_eigenvalue"] = min_eig
    report.diagnostics["positive_semidefinite"] = bool(min_eig >= -1e-12)
    _emit(io.dumps(io.report_document(report)), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--renormalize", action="store_true", default=argparse.SUPPRESS,
                        help="rescale state files that are not normalized")
    common.add_argument("--qubit-convention", choices=["paper", "general"], default=argparse.SUPPRESS,
                        help="qubit angle convention: 'paper' is the textbook phi = 2 phi_1, 'general' uses phi_1 (d=2 only)")

    parser = argparse.ArgumentParser(prog="mubphase", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite for a prime dimension")
    p.add_argument("d")
    p.add_argument("-o", "--output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include wall time (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mubs", parents=[common], help="emit the d+1 mutually unbiased bases")
    p.add_argument("d")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mubs)

    p = sub.add_parser("phase-dist", parents=[common], help="tabulate P(phi) on a uniform grid as CSV")
    p.add_argument("state")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_phase_dist)

    p = sub.add_parser("expectation", parents=[common], help="print <E^k(phi)> for a state")
    p.add_argument("state")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--phi", required=True, help="comma-separated angles in radians")
    p.set_defaults(func=cmd_expectation)

    p = sub.add_parser("povm-check", parents=[common], help="check the covariant phase POVM")
    p.add_argument("d")
    p.add_argument("--gamma", help="comma-separated coefficients gamma_1..gamma_(d-1), e.g. 1,1 or 0.5+0.1j,0.5-0.1j")
    p.add_argument("--grid", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_povm_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # defaults are filled here: the shared parent actions must keep SUPPRESS
    for name, value in (("renormalize", False), ("qubit_convention", "general")):
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.func(args)
    except (UsageError, io.StateFileError, DimensionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
