import json
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mubphase import io
from mubphase.cli import main
from mubphase.mub import build_mubs, unbiasedness_report
from mubphase.reports import Check, Report
from mubphase.verify import verify_dimension


def write_state(tmp_path, amps, name="state.json", **extra):
    doc = {"schema": 1, "dim": len(amps), "amplitudes": [[complex(a).real, complex(a).imag] for a in amps]}
    doc.update(extra)
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.mark.parametrize("x, text", [
    (0.0, "0"), (1.0, "1"), (-0.5, "-0.5"), (1 / 3, "0.333333333333"),
    (1e-5, "1e-05"), (1.5e7, "1.5e+07"), (0.0253302959106, "0.0253302959106"),
])
def test_fmt_float_examples(x, text):
    assert io.fmt_float(x) == text


@given(st.floats(allow_nan=False, allow_infinity=False, min_value=-1e300, max_value=1e300))
def test_fmt_float_round_trip(x):
    out = io.fmt_float(x)
    assert "E" not in out
    back = float(out)
    assert back == 0 if x == 0 else abs(back - x) <= 1e-11 * abs(x)


def test_fmt_float_rejects_nan():
    with pytest.raises(ValueError):
        io.fmt_float(float("nan"))


def test_parse_state_errors():
    with pytest.raises(io.StateFileError, match="missing"):
        io.parse_state({"dim": 2})
    with pytest.raises(io.StateFileError, match="prime"):
        io.parse_state({"dim": 4, "amplitudes": [[1, 0]] * 4})
    with pytest.raises(io.StateFileError, match="pair"):
        io.parse_state({"dim": 2, "amplitudes": [[1, 0], [0]]})
    with pytest.raises(io.StateFileError, match="renormalize"):
        io.parse_state({"dim": 2, "amplitudes": [[1, 0], [1, 0]]})
    with pytest.raises(io.StateFileError, match="schema"):
        io.parse_state({"schema": 9, "dim": 2, "amplitudes": [[1, 0], [0, 0]]})
    c = io.parse_state({"dim": 2, "amplitudes": [[1, 0], [1, 0]]}, renormalize=True)
    assert abs(c[0] - 2 ** -0.5) < 1e-15


def test_state_document_round_trip(rng):
    c = rng.normal(size=5) + 1j * rng.normal(size=5)
    c /= np.linalg.norm(c)
    assert np.allclose(io.parse_state(json.loads(io.dumps(io.state_document(c)))), c, atol=1e-11)


def test_report_document():
    r = Report("verify", 3, [Check("a", 1e-15, 1e-12), Check("b", 1.0, 1e-12, note="n")])
    doc = io.report_document(r)
    assert doc["passed"] is False and doc["checks"][1]["note"] == "n"
    assert "elapsed_s" not in doc


@pytest.mark.parametrize("d", [2, 3, 5])
def test_mubs_json_and_csv_round_trip(d):
    mubs = build_mubs(d)
    for back in (io.mubs_from_document(json.loads(io.dumps(io.mubs_document(mubs)))),
                 io.mubs_from_csv(io.mubs_csv(mubs))):
        assert len(back) == d + 1
        assert unbiasedness_report(back).max_deviation < 1e-9


def run(*argv):
    return main([str(a) for a in argv])


def test_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "v.json"
    assert run("verify", 3, "-o", out) == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] and doc["dim"] == 3 and all(c["passed"] for c in doc["checks"])
    assert run("verify", 4) == 2
    assert "prime" in capsys.readouterr().err
    assert run("verify", 37) == 2
    assert run("verify", "abc") == 2


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("verify", 5, "-o", a)
    run("verify", 5, "-o", b)
    assert a.read_bytes() == b.read_bytes()
    run("verify", 5, "--timing", "-o", a)
    assert "elapsed_s" in json.loads(a.read_text())


def test_verify_all_primes_pass():
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        assert verify_dimension(d).passed, d


def test_mubs_cli(tmp_path):
    j, c = tmp_path / "m.json", tmp_path / "m.csv"
    assert run("mubs", 7, "-o", j) == 0
    assert run("mubs", 7, "--format", "csv", "-o", c) == 0
    text = c.read_bytes()
    assert b"\r" not in text
    lines = text.decode().splitlines()
    assert lines[0] == "label,operator,vector,component,re,im"
    assert len([l for l in lines[1:] if not l.startswith("#")]) == 8 * 7 * 7
    assert lines[-1] == "# passed=true"
    assert unbiasedness_report(io.mubs_from_csv(text.decode())).passed
    assert unbiasedness_report(io.mubs_from_document(json.loads(j.read_text()))).passed
    run("mubs", 7, "--format", "csv", "-o", tmp_path / "again.csv")
    assert (tmp_path / "again.csv").read_bytes() == text


def test_phase_dist_cli(tmp_path):
    state = write_state(tmp_path, [1, 0, 0])
    out = tmp_path / "p.csv"
    assert run("phase-dist", state, "--grid", 16, "-o", out) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "phi_1,phi_2,P"
    rows = [l for l in lines[1:] if not l.startswith("#")]
    assert len(rows) == 256
    assert rows[0] == "0,0,0.0253302959106"
    assert rows[1].startswith("0,0.392699081699,")
    assert "# riemann_sum=1" in lines and "# grid_N=16" in lines


def test_phase_dist_normalization_random(tmp_path, rng):
    c = rng.normal(size=3) + 1j * rng.normal(size=3)
    state = write_state(tmp_path, c / np.linalg.norm(c))
    out = tmp_path / "p.csv"
    run("phase-dist", state, "-o", out)
    total = float(out.read_text().splitlines()[-3].split("=")[1])
    assert abs(total - 1) < 1e-6


def test_phase_dist_usage_errors(tmp_path, capsys):
    assert run("phase-dist", write_state(tmp_path, [1, 0]), "--grid", 4) == 2
    assert run("phase-dist", tmp_path / "missing.json") == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run("phase-dist", bad) == 2
    assert run("phase-dist", write_state(tmp_path, [1, 1], "n.json")) == 2
    assert "renormalize" in capsys.readouterr().err
    assert run("--renormalize", "phase-dist", write_state(tmp_path, [1, 1], "n.json"), "--grid", 8,
               "-o", tmp_path / "x.csv") == 0


def test_expectation_cli(tmp_path, capsys):
    state = write_state(tmp_path, [2 ** -0.5, 2 ** -0.5])
    assert run("expectation", state, "--k", 1, "--phi", 0) == 0
    assert capsys.readouterr().out.strip() == "re=1 im=0"
    # textbook convention: <E(phi)> = cos(phi) for theta = pi/2, chi = 0
    assert run("expectation", state, "--phi", 1.0, "--qubit-convention", "paper") == 0
    re = float(capsys.readouterr().out.split()[0][3:])
    assert abs(re - np.cos(1.0)) < 1e-11
    assert run("expectation", state, "--phi=-0.5") == 0
    assert run("expectation", state, "--phi", "0.1,0.2") == 2
    assert run("expectation", state, "--k", 2, "--phi", 0) == 2
    assert run("expectation", state, "--phi", "abc") == 2


def test_expectation_qutrit_two_level(tmp_path, capsys):
    state = write_state(tmp_path, [2 ** -0.5, 2 ** -0.5, 0])
    assert run("expectation", state, "--phi", "0.3,1.7") == 0
    parts = capsys.readouterr().out.split()
    z = complex(float(parts[0][3:]), float(parts[1][3:]))
    assert abs(abs(z) - 0.5) < 1e-11


def test_povm_check_cli(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert run("povm-check", 2, "--gamma", 1, "-o", out) == 0
    doc = json.loads(out.read_text())
    assert doc["diagnostics"]["positive_semidefinite"] is True
    assert run("povm-check", 3, "--gamma", "1,2") == 2
    assert run("povm-check", 3, "--gamma", "1") == 2
    assert run("povm-check", 5, "--gamma", "0.5+0.1j,0.2,0.2,0.5-0.1j", "-o", out) == 0
    # large gammas break positivity but not the other checks
    assert run("povm-check", 2, "--gamma", 3, "-o", out) == 0
    assert json.loads(out.read_text())["diagnostics"]["positive_semidefinite"] is False


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mubphase.cli", "verify", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]


def test_global_flags_before_subcommand(tmp_path, capsys):
    state = write_state(tmp_path, [2 ** -0.5, 2 ** -0.5])
    assert run("--qubit-convention", "paper", "expectation", state, "--phi", 1.0) == 0
    re = float(capsys.readouterr().out.split()[0][3:])
    assert abs(re - np.cos(1.0)) < 1e-11


def test_phase_dist_textbook_convention(tmp_path):
    state = write_state(tmp_path, [2 ** -0.5, 2 ** -0.5])
    out = tmp_path / "p.csv"
    assert run("phase-dist", state, "--grid", 64, "--qubit-convention", "paper", "-o", out) == 0
    lines = out.read_text().splitlines()
    rows = np.array([[float(v) for v in l.split(",")] for l in lines[1:] if not l.startswith("#")])
    # P(phi) = [1 + cos(phi)] / (2 pi) in the textbook angle for theta = pi/2, chi = 0
    assert np.max(np.abs(rows[:, 1] - (1 + np.cos(rows[:, 0])) / (2 * np.pi))) < 1e-11
    assert "# riemann_sum=1" in lines
