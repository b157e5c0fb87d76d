import csv
import math
import os

import numpy as np
import pytest

from bosonspin.cli import CSV_COLUMNS, main, run_sweep, write_csv
from bosonspin.presets import FIGURE_COLUMNS, FIGURE_PRESETS
from bosonspin.scenario import Scenario, ScenarioError, load_scenario, parse_number

SCENARIO_TEXT = """
[trajectory]
xi = 0.9, 0.6
xiPrime = 0.1
phi = 0

[ensemble]
deltaTilde = 1/6
betaDelta = 1.0
nU = 20
nMac = 100
gMax = 1.0
omega = 3.0

[grid]
tauStart = 0.0
tauStop = 12.0
points = 41

[run]
routes = hfe, gaussian
seed = 77
mcSamples = 5000
"""


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scn.ini"
    path.write_text(SCENARIO_TEXT)
    return str(path)


def test_parse_number():
    assert parse_number("0.25") == 0.25
    assert parse_number("1/6") == pytest.approx(1 / 6)
    assert parse_number("pi/4") == pytest.approx(math.pi / 4)
    assert parse_number("3pi/10") == pytest.approx(0.3 * math.pi)
    assert parse_number("-pi") == pytest.approx(-math.pi)
    assert parse_number("2pi") == pytest.approx(2 * math.pi)


def test_load_scenario(scenario_file):
    scn = load_scenario(scenario_file)
    assert scn.xis == (0.9, 0.6)
    assert scn.delta_tilde == pytest.approx(1 / 6)
    assert scn.routes == ("hfe", "gaussian")
    assert [label for label, _, _ in scn.curves()] == ["xi=0.9", "xi=0.6"]


def test_scenario_errors_name_the_field(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("[grid]\npoints = 1\n")
    with pytest.raises(ScenarioError, match="grid.points"):
        load_scenario(str(bad))
    bad.write_text("[run]\nroutes =\n")
    with pytest.raises(ScenarioError, match="routes"):
        load_scenario(str(bad))
    bad.write_text("[run]\nroutes = telepathy\n")
    with pytest.raises(ScenarioError, match="telepathy"):
        load_scenario(str(bad))
    bad.write_text("[grid]\nwidth = 3\n")
    with pytest.raises(ScenarioError, match="unknown scenario key"):
        load_scenario(str(bad))
    with pytest.raises(ScenarioError):
        Scenario(routes=())
    with pytest.raises(ScenarioError):
        Scenario(xis=(0.1, 0.2), phis=(0.0, 0.1))


def test_sweep_rows_and_ranges(scenario_file):
    scn = load_scenario(scenario_file)
    rows = run_sweep(scn)
    assert len(rows) == 2 * 2 * 41  # curves x routes x grid
    assert rows == sorted(rows, key=lambda r: (r["route"], r["label"], r["tau"]))
    for row in rows:
        assert -1e-10 <= row["gammaSq"] <= 1 + 1e-10
        assert -1e-10 <= row["b"] <= 1 + 1e-10


def test_csv_byte_identical(scenario_file, tmp_path):
    scn = load_scenario(scenario_file)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(run_sweep(scn), str(p1))
    write_csv(run_sweep(scn), str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    header = p1.read_text().splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)


def test_monte_carlo_route_deterministic(tmp_path):
    scn = Scenario(xis=(0.9,), xi_prime=0.1, phis=(math.pi / 4,),
                   tau_stop=5.0, points=6, routes=("monte-carlo",),
                   mc_samples=20000, seed=99)
    rows1 = run_sweep(scn)
    rows2 = run_sweep(scn)
    assert rows1 == rows2
    assert all(row["gammaStderr"] is not None for row in rows1)


def test_cli_sweep_and_lengths(scenario_file, tmp_path, capsys):
    out = str(tmp_path / "out.csv")
    assert main(["sweep", scenario_file, "--out", out]) == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 164
    assert {r["route"] for r in rows} == {"hfe", "gaussian"}

    assert main(["lengths", scenario_file]) == 0
    text = capsys.readouterr().out
    # nU=20, <g^2> = 1/3, Omega = 3: lambda_dec = 3/sqrt(20/3)
    expected = 3.0 / math.sqrt(20 / 3.0)
    assert f"{expected:.6f}"[:6] in text
    assert "lambda_dist" in text


def test_cli_points_and_routes_override(scenario_file, tmp_path):
    out = str(tmp_path / "small.csv")
    assert main(["sweep", scenario_file, "--out", out, "--points", "5",
                 "--routes", "hfe"]) == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 10  # 2 curves x 5 points, single route


def test_cli_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.ini"
    bad.write_text("[run]\nroutes = nonsense\n")
    assert main(["sweep", str(bad)]) == 2
    assert "nonsense" in capsys.readouterr().err


def test_cli_figure_presets(tmp_path):
    out = str(tmp_path / "fig1.csv")
    assert main(["figure", "fig1", "--out", out]) == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2 * 1001
    labels = {r["label"] for r in rows}
    assert labels == {"xi=0.9", "xi=0.6"}


def test_figure_presets_complete():
    assert set(FIGURE_PRESETS) == {f"fig{i}" for i in range(1, 9)}
    assert set(FIGURE_COLUMNS) == set(FIGURE_PRESETS)
    for scn in FIGURE_PRESETS.values():
        scn.curves()  # validates internally


def test_validate_default_passes(capsys):
    assert main(["validate", "--seed", "13"]) == 0
    out = capsys.readouterr().out
    assert "all checks passed" in out
    assert out.count("PASS") >= 4


def test_validate_out_of_domain_skips(tmp_path, capsys):
    scn = tmp_path / "wild.ini"
    scn.write_text(
        "[trajectory]\nxi = 5.0\nxiPrime = 0.1\n"
        "[grid]\ntauStop = 5\npoints = 11\n[run]\nroutes = hfe\nmcSamples = 2000\n"
    )
    code = main(["validate", str(scn)])
    out = capsys.readouterr().out
    assert "SKIP" in out and "hfe_valid" in out
    assert code in (0, 1)


def test_validate_report_reproducible(tmp_path, capsys):
    assert main(["validate", "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["validate", "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
