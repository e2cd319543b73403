"""
Tests for the command line, CSV / JSON output and SVG plots
"""
import csv
import io
import json
import math

import pytest

from main import main, parse_measure_literal
from errors import LiteralParseError
from measure1d import integrate
from output import emit_svg, read_columns, read_grid, write_csv


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_pvolume_to_stdout(capsys):
    code = main(["pvolume", "--set", "[0,1]u[2,3]", "--measure", "lebesgue",
                 "--tmin", "0", "--tmax", "1", "--steps", "101"])
    assert code == 0
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == ["t", "V", "V_left_deriv", "V_right_deriv", "V_second_deriv"]
    assert len(rows) == 102
    assert float(rows[1][1]) == 2.0
    assert rows[1][2] == ""
    assert float(rows[-1][0]) == 1.0
    assert float(rows[-1][1]) == 5.0


def test_pvolume_with_concavity_check_round_trips(tmp_path, capsys):
    path = str(tmp_path / "curve.csv")
    code = main(["pvolume", "--set", "[0,1]u[2,3]", "--tmax", "1", "--s", "1", "--out", path])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["kind"] == "pvolume"
    assert report["verdict"] == "pass"

    ts, vs = read_columns(path, 2)
    assert ts.size == 101
    assert vs[0] == 2.0 and vs[-1] == 5.0

    assert main(["check-concavity", "--csv", path, "--s", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "pass"


def test_check_concavity_reports_failure(tmp_path, capsys):
    path = tmp_path / "convex.csv"
    with open(path, "w", newline="") as stream:
        write_csv(stream, ["t", "V"], [(t / 10, 1 + (t / 10) ** 2) for t in range(11)])
    assert main(["check-concavity", "--csv", str(path), "--s", "1"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "fail"
    assert report["violation_count"] > 0


def test_pvolume_s_needs_out(capsys):
    assert main(["pvolume", "--set", "[0,1]", "--tmax", "1", "--s", "0.5"]) == 2


@pytest.mark.parametrize("argv", [
    ["pvolume", "--set", "[0,1]", "--tmax", "1", "--bogus"],
    ["frobnicate"],
    [],
    ["pvolume", "--set", "[0,1]", "--tmax", "1", "--measure", "foo:1"],
    ["pvolume", "--set", "[0,1", "--tmax", "1"],
    ["pvolume", "--set", "[0,1]", "--tmax", "1", "--steps", "1"],
    ["blcheck", "--phi", "quadratic", "--log-mode", "--corollary"],
    ["blcheck", "--phi", "nosuch"],
    ["counterexample", "nope"],
    ["counterexample"],
    ["counterexample", "localization-jump", "--seed", "3"],
    ["counterexample", "ball-plus-point", "--param", "n=1"],
    ["hopflax", "--f", "gauss", "--check", "--emit-ht", "1"],
])
def test_usage_errors_exit_2(argv):
    assert main(argv) == 2


def test_measure_literals(tmp_path):
    assert parse_measure_literal("uniform:2:0:1").describe()
    assert integrate(parse_measure_literal("gauss:0:1"), -math.inf, math.inf) == pytest.approx(1.0)
    assert integrate(parse_measure_literal("power:1:0:0:2"), 0, 2) == pytest.approx(2.0)
    with pytest.raises(LiteralParseError):
        parse_measure_literal("power:1:0:0")
    with pytest.raises(LiteralParseError):
        parse_measure_literal("gauss:a:b")

    table = tmp_path / "density.csv"
    with open(table, "w", newline="") as stream:
        write_csv(stream, ["z", "value"], [(k / 10, 1.0) for k in range(11)])
    assert integrate(parse_measure_literal(f"table:{table}"), 0, 1) == pytest.approx(1.0)


def test_read_grid_requires_uniform_spacing(tmp_path):
    path = tmp_path / "grid.csv"
    with open(path, "w", newline="") as stream:
        write_csv(stream, ["z", "value"], [(0.0, 1.0), (0.1, 1.0), (0.3, 1.0)])
    with pytest.raises(LiteralParseError):
        read_grid(str(path))


def test_counterexample_json(capsys):
    assert main(["counterexample", "ball-plus-point", "--param", "n=2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == 1
    assert report["kind"] == "counterexample"
    assert report["name"] == "ball-plus-point"
    assert report["verdict"] == "pass"
    assert report["quantity"] == pytest.approx(2.0)


def test_counterexample_list(capsys):
    assert main(["counterexample", "--list"]) == 0
    listing = json.loads(capsys.readouterr().out)
    names = [entry["name"] for entry in listing["entries"]]
    assert names == ["half-one", "asymmetric-body", "ball-plus-point", "connected-2d",
                     "localization-jump", "positive-suites"]


def test_counterexample_emits_curve(tmp_path, capsys):
    path = str(tmp_path / "jump.csv")
    assert main(["counterexample", "localization-jump", "--emit-curve", path]) == 0
    ts, vs = read_columns(path, 2)
    assert ts[0] == 0.0 and ts[-1] == 2.0
    assert vs[-1] == pytest.approx(3.0)


def test_counterexample_seed_reaches_the_suites(capsys):
    assert main(["counterexample", "positive-suites", "--seed", "5", "--param", "cases=2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["seed"] == 5
    assert report["cases"] == 2


def test_blcheck_log_mode(capsys):
    assert main(["blcheck", "--phi", "quadratic", "--log-mode", "--t", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "blcheck"
    assert report["mode"] == "log"
    assert report["lhs"] == pytest.approx(0.5, rel=0.01)


def test_hopflax_gaussian(capsys):
    assert main(["hopflax", "--f", "gauss", "--gamma", "0", "--p", "2", "--tmax", "1", "--steps", "5"]) == 0
    rows = _rows(capsys.readouterr().out)
    assert rows[0] == ["t", "F"]
    for t, F in rows[1:]:
        assert float(F) == pytest.approx(math.sqrt(2 * math.pi * (1 + float(t))), rel=1e-6)


def test_hopflax_check_and_plot(tmp_path, capsys):
    svg = tmp_path / "F.svg"
    code = main(["hopflax", "--f", "gauss", "--gamma", "0", "--tmax", "1", "--steps", "5",
                 "--check", "--svg", str(svg)])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "pass"
    assert svg.read_text().lstrip().startswith("<?xml")


def test_hopflax_emits_h_t(tmp_path):
    path = str(tmp_path / "h.csv")
    assert main(["hopflax", "--f", "gauss", "--emit-ht", "1", "--out", path]) == 0
    z, values = read_columns(path, 2)
    assert z.size == 2001
    assert values[z.size // 2] == pytest.approx(1.0, abs=1e-9)


def test_svg_is_deterministic(tmp_path):
    curve = [(t / 10, math.sqrt(1 + t / 10)) for t in range(11)]
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    emit_svg(curve, str(first))
    emit_svg(curve, str(second))
    assert first.read_bytes() == second.read_bytes()


def test_hopflax_labels_gamma_outside_the_proven_range(tmp_path, capsys):
    path = str(tmp_path / "h.csv")
    assert main(["hopflax", "--f", "gauss", "--gamma", "-1.5", "--emit-ht", "1", "--out", path]) == 2
    capsys.readouterr()
    assert main(["hopflax", "--f", "gauss", "--gamma", "-1.5", "--allow-any-gamma",
                 "--emit-ht", "1", "--out", path]) == 0
    assert "unverified" in capsys.readouterr().err

    code = main(["hopflax", "--f", "gauss", "--gamma", "-1.5", "--allow-any-gamma", "--p", "4",
                 "--tmax", "1", "--steps", "3", "--check"])
    assert code in (0, 1)
    report = json.loads(capsys.readouterr().out)
    assert any("unverified" in note for note in report["notes"])


def test_hopflax_rejects_positive_gamma(capsys):
    assert main(["hopflax", "--f", "gauss", "--gamma", "0.5", "--allow-any-gamma"]) == 2
    assert "out of theorem range" in capsys.readouterr().err
