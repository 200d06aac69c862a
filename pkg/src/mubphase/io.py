"""State files, report documents and table serialization.

All numbers are written with 12 significant digits so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .linalg import DimensionError, as_state
from .mub import MubCollection, OrthonormalBasis, unbiasedness_report
from .pauli import check_dim, generator_name
from .phase import PhaseDistribution
from .reports import Report

SCHEMA = 1


class StateFileError(ValueError):
    pass


def fmt_float(x: float) -> str:
    """12 significant digits; scientific with lowercase ``e`` when ``|x| < 1e-4`` or ``>= 1e6``."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot format non-finite value {x}")
    if x == 0:
        return "0"
    if abs(x) < 1e-4 or abs(x) >= 1e6:
        mant, exp = f"{x:.11e}".split("e")
        mant = mant.rstrip("0").rstrip(".")
        return f"{mant}e{int(exp):+03d}"
    out = f"{x:.12g}"
    # rounding can still land on the scientific branch of %g
    if "e" in out:
        out = f"{x:.12f}".rstrip("0").rstrip(".")
    return out


def quantize(obj):
    """Round every float in a JSON-like tree to 12 significant digits."""
    if isinstance(obj, (float, np.floating)):
        return float(fmt_float(obj))
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, dict):
        return {k: quantize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [quantize(v) for v in obj]
    return obj


def dumps(doc: dict) -> str:
    return json.dumps(quantize(doc), indent=2) + "\n"


# round-off below this is written as an exact zero in basis tables
SNAP = 1e-14


def _snap(x: float) -> float:
    return 0.0 if abs(x) < SNAP else float(x)


def complex_pairs(v) -> list[list[float]]:
    return [[_snap(z.real), _snap(z.imag)] for z in np.asarray(v, dtype=complex)]


def parse_state(doc, renormalize: bool = False) -> np.ndarray:
    if not isinstance(doc, dict):
        raise StateFileError("state file must hold a JSON object")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise StateFileError(f"unsupported schema {doc.get('schema')!r}, expected {SCHEMA}")
    for key in ("dim", "amplitudes"):
        if key not in doc:
            raise StateFileError(f"state file is missing '{key}'")
    dim, amps = doc["dim"], doc["amplitudes"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise StateFileError("'dim' must be an integer")
    try:
        check_dim(dim)
    except DimensionError as exc:
        raise StateFileError(str(exc)) from exc
    if not isinstance(amps, list) or len(amps) != dim:
        raise StateFileError(f"'amplitudes' must be a list of {dim} [re, im] pairs")
    values = []
    for i, pair in enumerate(amps):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in pair)):
            raise StateFileError(f"amplitude {i} must be a [re, im] pair of numbers")
        values.append(complex(pair[0], pair[1]))
    try:
        return as_state(values, renormalize=renormalize, tol=1e-9)
    except ValueError as exc:
        hint = "" if renormalize else " (use --renormalize to rescale)"
        raise StateFileError(f"{exc}{hint}") from exc


def read_state_file(path, renormalize: bool = False) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path}: not valid JSON ({exc})") from exc
    return parse_state(doc, renormalize)


def state_document(state) -> dict:
    c = np.asarray(state, dtype=complex)
    return {"schema": SCHEMA, "dim": int(c.size), "amplitudes": complex_pairs(c)}


def report_document(report: Report, elapsed: float | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "command": report.command,
        "dim": report.dim,
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "skipped": c.skipped,
                "residual": c.residual,
                "tolerance": c.tolerance,
                **({"note": c.note} if c.note else {}),
            }
            for c in report.checks
        ],
    }
    if report.diagnostics:
        doc["diagnostics"] = report.diagnostics
    if elapsed is not None:
        doc["elapsed_s"] = elapsed
    return doc


def mubs_document(mubs: MubCollection) -> dict:
    rep = unbiasedness_report(mubs)
    return {
        "schema": SCHEMA,
        "dim": mubs.d,
        "bases": [
            {
                "label": b.label,
                "operator": generator_name(b.label),
                "eigenvalues": complex_pairs(b.eigenvalues),
                "vectors": [complex_pairs(b.vectors[:, j]) for j in range(mubs.d)],
            }
            for b in mubs
        ],
        "summary": {
            "max_deviation": rep.max_deviation,
            "tolerance": rep.tolerance,
            "passed": rep.passed,
        },
    }


def mubs_from_document(doc: dict) -> MubCollection:
    d = check_dim(doc["dim"])
    bases = []
    for b in doc["bases"]:
        vecs = np.array([[complex(re, im) for re, im in v] for v in b["vectors"]]).T
        vals = np.array([complex(re, im) for re, im in b.get("eigenvalues", [[1, 0]] * d)])
        bases.append(OrthonormalBasis(label=int(b["label"]), vectors=vecs, eigenvalues=vals))
    return MubCollection(d=d, bases=tuple(bases))


def mubs_csv(mubs: MubCollection) -> str:
    rep = unbiasedness_report(mubs)
    lines = ["label,operator,vector,component,re,im"]
    for b in mubs:
        name = generator_name(b.label)
        for j in range(mubs.d):
            for n, z in enumerate(b.vectors[:, j]):
                lines.append(f"{b.label},{name},{j},{n},{fmt_float(_snap(z.real))},{fmt_float(_snap(z.imag))}")
    lines.append(f"# max_deviation={fmt_float(rep.max_deviation)}")
    lines.append(f"# passed={'true' if rep.passed else 'false'}")
    return "\n".join(lines) + "\n"


def mubs_from_csv(text: str) -> MubCollection:
    rows = [r for r in text.splitlines()[1:] if r and not r.startswith("#")]
    cells = [r.split(",") for r in rows]
    labels = sorted({int(c[0]) for c in cells})
    d = check_dim(max(int(c[3]) for c in cells) + 1)
    vecs = {k: np.zeros((d, d), dtype=complex) for k in labels}
    for label, _, j, n, re, im in cells:
        vecs[int(label)][int(n), int(j)] = complex(float(re), float(im))
    bases = tuple(OrthonormalBasis(k, vecs[k], np.ones(d, dtype=complex)) for k in labels)
    return MubCollection(d=d, bases=bases)


def phase_distribution_csv(dist: PhaseDistribution) -> str:
    """Rows ``phi_1, ..., phi_(d-1), P`` in lexicographic grid order, then ``#`` summary lines."""
    header = ",".join(f"phi_{j + 1}" for j in range(dist.d - 1)) + ",P"
    lines = [header]
    for phis, p in zip(dist.points(), dist.values.ravel()):
        lines.append(",".join(fmt_float(a) for a in phis) + "," + fmt_float(p))
    lines.append(f"# riemann_sum={fmt_float(dist.riemann_sum)}")
    lines.append(f"# min_P={fmt_float(dist.min_value)}")
    lines.append(f"# grid_N={dist.grid_N}")
    return "\n".join(lines) + "\n"
