"""Tests for the command line."""
import csv
import io
import json
from pathlib import Path

from numpy.testing import assert_allclose
import pytest

from domino_waves import cli
from domino_waves.cli import main
from domino_waves.domino_wave_api import ChainGeometry, NumericalError, limiting_omega
from domino_waves.domino_wave_api.__version__ import __version__

FIXTURES = Path(__file__).parent / "fixtures"
GEOMETRY = ["--length", "1", "--spacing", "0.5", "--gravity", "9.81"]


def run(capsys, *argv):
    """Run the CLI and return its standard output."""
    assert main(list(argv)) == 0
    return capsys.readouterr().out


def run_failing(capsys, *argv):
    """Run the CLI expecting an early exit and return (code, stderr)."""
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    return excinfo.value.code, capsys.readouterr().err


def parse(text):
    """Split CSV output into data rows and the commented summary."""
    lines = text.splitlines()
    data = "\n".join(line for line in lines if not line.startswith("#"))
    rows = list(csv.DictReader(io.StringIO(data)))
    comments = [line[2:] for line in lines if line.startswith("# ")]
    summary = dict(zip(comments[0].split(","), comments[1].split(","))) if comments else {}
    return rows, summary


def test_speed(capsys):
    rows, _ = parse(run(capsys, "speed", *GEOMETRY))
    assert len(rows) == 1
    assert list(rows[0]) == ["omega_limit", "modulus", "fall_time", "speed", "G"]
    assert_allclose(float(rows[0]["speed"]), 9.81**0.5 * float(rows[0]["G"]), rtol=1e-12)


def test_speed_rejects_degenerate_geometry(capsys):
    code, err = run_failing(
        capsys, "speed", "--spacing", "1", "--length", "1", "--gravity", "9.81"
    )
    assert code == 2
    assert "0 < d < rod_length" in err


def test_speed_requires_geometry(capsys):
    code, err = run_failing(capsys, "speed", "--length", "1", "--gravity", "9.81")
    assert code == 2
    assert "spacing" in err


def test_speed_output_independent_of_mass(capsys):
    light = run(capsys, "speed", *GEOMETRY, "--mass", "1")
    heavy = run(capsys, "speed", *GEOMETRY, "--mass", "7")
    assert light == heavy


def test_speed_json(capsys):
    document = json.loads(run(capsys, "speed", *GEOMETRY, "--mass", "7", "--format", "json"))
    assert document["meta"]["command"] == "speed"
    assert document["meta"]["version"] == __version__
    assert document["meta"]["parameters"]["mass"] == 7.0
    assert document["meta"]["parameters"]["spacing"] == 0.5
    (row,) = document["rows"]
    assert set(row) == {"omega_limit", "modulus", "fall_time", "speed", "G"}


def test_speed_numerical_failure(capsys, monkeypatch):
    def fail(geom):
        raise NumericalError("quadrature did not converge")

    monkeypatch.setattr(cli, "limiting_solution", fail)
    code, err = run_failing(capsys, "speed", *GEOMETRY)
    assert code == 3
    assert "quadrature did not converge" in err


def test_debug_logging(capsys):
    main(["speed", *GEOMETRY, "--debug"])
    assert "Limiting wave" in capsys.readouterr().err
    main(["speed", *GEOMETRY])
    assert capsys.readouterr().err == ""


def test_output_file(capsys, tmp_path):
    expected = run(capsys, "speed", *GEOMETRY)
    target = tmp_path / "speed.csv"
    assert run(capsys, "speed", *GEOMETRY, "--out", str(target)) == ""
    assert target.read_text(encoding="utf-8") == expected


def test_curve_defaults(capsys):
    text = run(
        capsys, "curve", "--min", "0.05", "--max", "0.95", "--samples", "19", "--format", "csv"
    )
    rows, _ = parse(text)
    assert len(rows) == 19
    values = [float(row["G"]) for row in rows]
    assert all(later < earlier for earlier, later in zip(values, values[1:]))
    assert_allclose(float(rows[0]["d_over_l"]), 0.05)
    assert_allclose(float(rows[-1]["d_over_l"]), 0.95)


def test_curve_header_matches_golden(capsys):
    text = run(capsys, "curve")
    golden = (FIXTURES / "curve_header.csv").read_text(encoding="utf-8").strip()
    assert text.splitlines()[0] == golden


def test_curve_header_with_speed_matches_golden(capsys):
    text = run(capsys, "curve", "--length", "1", "--gravity", "9.81", "--samples", "3")
    golden = (FIXTURES / "curve_header_with_speed.csv").read_text(encoding="utf-8").strip()
    assert text.splitlines()[0] == golden
    rows, _ = parse(text)
    for row in rows:
        assert_allclose(float(row["v"]), 9.81**0.5 * float(row["G"]), rtol=1e-12)


def test_curve_is_deterministic(capsys):
    first = run(capsys, "curve", "--samples", "7")
    second = run(capsys, "curve", "--samples", "7")
    assert first.encode() == second.encode()


def test_curve_close_spacing(capsys):
    rows, _ = parse(run(capsys, "curve", "--min", "0.005", "--max", "0.02", "--samples", "4"))
    assert len(rows) == 4
    for row in rows:
        assert abs(float(row["G"]) * float(row["d_over_l"]) - 1.0) <= 0.01


def test_curve_ratio_below_double_range(capsys):
    code, err = run_failing(capsys, "curve", "--min", "1e-100", "--max", "0.5", "--samples", "2")
    assert code == 3
    assert "underflows" in err


def test_csv_keeps_twelve_significant_digits(capsys):
    rows, _ = parse(run(capsys, "speed", *GEOMETRY))
    for name, text in rows[0].items():
        mantissa = text.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
        assert len(mantissa) >= 12, name


@pytest.mark.parametrize(
    "argv",
    [
        ["--samples", "1"],
        ["--min", "0.9", "--max", "0.1"],
        ["--min", "0"],
        ["--max", "1"],
        ["--length", "1"],
    ],
)
def test_curve_rejects_options(capsys, argv):
    code, _ = run_failing(capsys, "curve", *argv)
    assert code == 2


def test_simulate_limiting_push(capsys):
    omega = limiting_omega(ChainGeometry(1.0, 0.5, 9.81))
    text = run(
        capsys, "simulate", *GEOMETRY, "--omega1", repr(omega), "--max-rods", "20", "--run-through"
    )
    rows, summary = parse(text)
    assert len(rows) == 20
    assert summary["converged_at"] == "1"
    closed = float(summary["closed_form_speed"])
    for row in rows:
        assert abs(float(row["v_k"]) - closed) <= 1e-9 * closed


def test_simulate_slow_push(capsys):
    text = run(capsys, "simulate", *GEOMETRY, "--omega1", "0.1", "--max-rods", "50")
    rows, summary = parse(text)
    assert len(rows) == 50
    assert [int(row["k"]) for row in rows] == list(range(1, 51))
    speeds = [float(row["v_k"]) for row in rows]
    assert all(later > earlier for earlier, later in zip(speeds, speeds[1:]))
    assert summary["converged_at"] == ""
    assert_allclose(float(summary["limiting_speed_estimate"]), speeds[-1], rtol=1e-14)


def test_simulate_json_summary(capsys):
    document = json.loads(
        run(capsys, "simulate", *GEOMETRY, "--omega1", "1", "--max-rods", "5", "--format", "json")
    )
    assert len(document["rows"]) == 5
    assert document["meta"]["summary"]["converged_at"] is None
    assert document["meta"]["parameters"]["omega1"] == 1.0
    assert {"index", "omega_i", "omega_f", "omega_b"} <= set(document["rows"][0])


def test_simulate_rejects_rest(capsys):
    code, err = run_failing(capsys, "simulate", *GEOMETRY, "--omega1", "0")
    assert code == 2
    assert "equilibrium" in err


def test_simulate_rejects_rod_count(capsys):
    code, _ = run_failing(capsys, "simulate", *GEOMETRY, "--omega1", "1", "--max-rods", "0")
    assert code == 2


def test_asymptotics_close(capsys):
    rows, _ = parse(run(capsys, "asymptotics", "--regime", "close"))
    assert [float(row["x"]) for row in rows] == [0.1, 0.01, 0.001]
    errors = [float(row["relative_error"]) for row in rows]
    assert errors[0] > errors[1] > errors[2]


def test_asymptotics_wide(capsys):
    rows, _ = parse(run(capsys, "asymptotics", "--regime", "wide"))
    assert len(rows) == 3
    errors = [float(row["relative_error"]) for row in rows]
    assert errors[0] > errors[1] > errors[2]


def test_asymptotics_wide_gaps(capsys):
    rows, _ = parse(run(capsys, "asymptotics", "--regime", "wide", "--gaps", "1e-3"))
    assert_allclose(float(rows[0]["x"]), 1.0 - 1e-3, rtol=1e-15)


@pytest.mark.parametrize(
    "argv",
    [
        ["--regime", "wide", "--points", "0.3"],
        ["--regime", "close", "--gaps", "1e-4"],
        ["--regime", "wide", "--points", "0.99", "--gaps", "1e-4"],
        ["--regime", "close", "--points", "1.5"],
    ],
)
def test_asymptotics_rejects_options(capsys, argv):
    code, _ = run_failing(capsys, "asymptotics", *argv)
    assert code == 2
