import subprocess
import sys

import numpy as np
import pytest

from mqnmr.cli import (
    SweepConfig,
    emit_csv,
    format_csv,
    main,
    run_single,
    run_sweep_beta,
    run_sweep_tau,
)
from mqnmr.errors import ConfigError
from mqnmr.model import ENTANGLEMENT_BETA

TAU_HEADER = "tau,G0,G2,Gm2,G2_plus_Gm2,concurrence_numeric,concurrence_analytic,witness"


def test_header_and_line_count(tmp_path):
    rows = run_sweep_tau(SweepConfig(beta=3.0, steps=3))
    path = tmp_path / "out.csv"
    emit_csv(rows, path)
    data = path.read_bytes()
    lines = data.decode("utf-8").split("\n")
    assert data.endswith(b"\n") and b"\r" not in data
    assert len(lines) - 1 == 4
    assert lines[0] == TAU_HEADER


def test_twelve_significant_digits():
    text = format_csv(run_sweep_tau(SweepConfig(beta=3.0, steps=7, tau_max=1e-4)))
    for line in text.splitlines()[1:]:
        for field in line.split(","):
            digits = field.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
            assert len(digits) <= 12


def test_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["--beta", "3", "--steps", "101"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_rows_obey_invariants():
    beta = 3.0
    rows = run_sweep_tau(SweepConfig(beta=beta, steps=201))
    for r in rows:
        assert abs(r.G2 - r.Gm2) <= 1e-10
        assert abs(r.G0 + r.G2 + r.Gm2 - np.tanh(beta / 2)) <= 1e-10
        assert abs(r.concurrence_numeric - r.concurrence_analytic) <= 1e-8
    assert rows[0].value == 0.0


def test_two_step_sweep_initial_row_separable():
    rows = run_sweep_tau(SweepConfig(beta=3.0, steps=2))
    assert [r.value for r in rows] == [0.0, 2e-3]
    assert abs(rows[0].G2_plus_Gm2) < 1e-15
    assert rows[0].witness > 0


def test_below_threshold_concurrence_is_zero():
    rows = run_sweep_tau(SweepConfig(beta=ENTANGLEMENT_BETA * 0.98))
    assert all(r.concurrence_numeric == 0 for r in rows)


def test_physical_parameterization_matches_beta():
    rows_t = run_single(SweepConfig(mode="single", omega0=2 * np.pi * 500e6, temperature=0.008, tau=9e-5))
    rows_b = run_single(SweepConfig(mode="single", beta=2.99952691901602, tau=9e-5))
    assert rows_t[0].concurrence_numeric == pytest.approx(rows_b[0].concurrence_numeric, abs=1e-12)


def test_sweep_beta_values():
    rows = run_sweep_beta(SweepConfig(mode="sweep-beta", beta_min=1.0, beta_max=3.0, steps=3))
    assert rows[0].header()[0] == "beta" and rows[0].header()[-1] == "threshold"
    last = rows[-1]
    assert last.concurrence_numeric == pytest.approx(0.8147949341830423, abs=1e-12)
    assert last.threshold == pytest.approx(0.009019210173467887, rel=1e-12)
    assert last.G2_plus_Gm2 == pytest.approx(np.tanh(1.5), abs=1e-12)
    edge = run_sweep_beta(SweepConfig(mode="sweep-beta", beta_min=ENTANGLEMENT_BETA, beta_max=2.0, steps=2))
    assert edge[0].concurrence_analytic == 0
    assert edge[0].concurrence_numeric < 1e-12


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(mode="bogus", beta=1.0), "mode"),
        (dict(beta=1.0, steps=1), "steps"),
        (dict(beta=1.0, tau_max=0.0), "tau_max"),
        (dict(), "beta"),
        (dict(beta=1.0, omega0=1e9, temperature=0.01), "beta"),
        (dict(omega0=1e9), "beta"),
        (dict(beta=-1.0), "beta"),
        (dict(mode="sweep-beta", beta_min=2.0, beta_max=1.0), "beta_min"),
        (dict(mode="sweep-beta", beta_min=1.0), "beta_min"),
        (dict(mode="sweep-beta", beta_min=1.0, beta_max=2.0, beta=1.0), "beta"),
        (dict(mode="single", beta=1.0), "tau"),
    ],
)
def test_config_errors_name_field(kwargs, field):
    with pytest.raises(ConfigError) as exc:
        SweepConfig(**kwargs).validate()
    assert exc.value.field == field


def test_exit_codes(tmp_path, capsys):
    assert main(["--beta", "3", "--steps", "5", "--out", str(tmp_path / "x.csv")]) == 0
    assert main(["--steps", "5"]) == 2
    assert main(["--beta", "3", "--out", str(tmp_path / "missing" / "x.csv")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["--beta", "3", "--bogus-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--beta", "3", "--coupling-hz", "1", "--coupling-rad-s", "1"])
    assert exc.value.code == 2


def test_numeric_residue_exit_code(monkeypatch):
    from mqnmr import cli

    monkeypatch.setattr(cli, "analytic_concurrence", lambda *a, **k: 0.5)
    assert main(["--mode", "single", "--beta", "3", "--tau-s", "0"]) == 3


def test_coupling_hz_is_converted(capsys):
    assert main(["--mode", "single", "--beta", "3", "--coupling-hz", "1307", "--tau-s", "9e-5"]) == 0
    via_hz = capsys.readouterr().out
    assert main(["--mode", "single", "--beta", "3", "--coupling-rad-s", str(2 * np.pi * 1307), "--tau-s", "9e-5"]) == 0
    assert capsys.readouterr().out == via_hz


def test_bad_tolerance_env(monkeypatch):
    monkeypatch.setenv("MQNMR_TOLERANCE", "nope")
    assert main(["--mode", "single", "--beta", "1", "--tau-s", "0"]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mqnmr", "--mode", "single", "--beta", "3", "--tau-s", "0"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[0] == TAU_HEADER
