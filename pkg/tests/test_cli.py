from fractions import Fraction

import click
import pytest
from click.testing import CliRunner

from sabar.cli import main, parse_args
from sabar.io import read_barcode_json
from sabar.persistence import INF, Index

EDGE_FILE = "filtration v1\n0 0\n0 1\n1 0 1\n"


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("SABAR_THREADS", raising=False)


def test_help():
    result = CliRunner().invoke(main, [])
    assert result.exit_code == 0
    assert "barcode" in result.output


def test_simplicial_barcode(tmp_path):
    source = tmp_path / "edge.txt"
    source.write_text(EDGE_FILE)
    out = tmp_path / "bars.json"
    result = CliRunner().invoke(main, ["barcode", "simplicial", str(source), "--json", str(out)])
    assert result.exit_code == 0, result.output
    b0, b1 = read_barcode_json(out.read_bytes())
    assert b0.as_tuples() == {(Index(0), Index(1), 1), (Index(0), INF, 1)}
    assert len(b1) == 0


def test_rips_barcode(tmp_path):
    points = tmp_path / "square.csv"
    points.write_text("0,0\n1,0\n1,1\n0,1\n")
    out = tmp_path / "bars.json"
    result = CliRunner().invoke(
        main, ["barcode", "rips", "--points", str(points), "--json", str(out)]
    )
    assert result.exit_code == 0, result.output
    b0, b1 = read_barcode_json(out.read_bytes())
    assert len(b0) == 2
    assert len(b1) == 1


def test_sublevel_grid_only(tmp_path):
    out = tmp_path / "bars.json"
    args = [
        "barcode", "sublevel",
        "--formula", "x^2 + y^2 - 1 <= 0",
        "--poly", "x",
        "--radius", "4",
        "--grid", "8",
        "--levels", "-2;0;2",
        "--json", str(out),
    ]  # fmt: skip
    result = CliRunner().invoke(main, args)
    assert result.exit_code == 0, result.output
    b0, _ = read_barcode_json(out.read_bytes())
    assert len(b0) == 1


def test_roots_order():
    result = CliRunner().invoke(main, ["roots", "order", "--polys", "X^2 - 4; X"])
    assert result.exit_code == 0, result.output
    assert "-2.000000" in result.output
    assert "0.000000" in result.output


def test_make_closed():
    result = CliRunner().invoke(main, ["formula", "make-closed", "--formula", "X^2 - 1 <= 0"])
    assert result.exit_code == 0, result.output
    assert "realization" in result.output


def test_input_errors_exit_with_code_3(tmp_path):
    source = tmp_path / "bad.txt"
    source.write_text("0 0\n")
    result = CliRunner().invoke(main, ["barcode", "simplicial", str(source)])
    assert result.exit_code == 3
    result = CliRunner().invoke(main, ["formula", "make-closed", "--formula", "X^2 - 1 < 0"])
    assert result.exit_code == 3
    result = CliRunner().invoke(main, ["roots", "order", "--polys", "x*y - 1"])
    assert result.exit_code == 3


def test_usage_errors_exit_with_code_2():
    assert CliRunner().invoke(main, ["barcode", "rips"]).exit_code == 2
    assert CliRunner().invoke(main, ["roots", "order", "--bogus"]).exit_code == 2


def test_parse_args():
    run = parse_args(
        ["barcode", "sublevel", "--formula", "x <= 0", "--poly", "x", "--radius", "9/4",
         "--levels", "0; 1/2", "--max-dim", "0"]
    )  # fmt: skip
    assert run.verb == "sublevel"
    assert run.radius == Fraction(9, 4)
    assert run.levels == (0, Fraction(1, 2))
    assert run.grid_n == 32
    assert run.max_dim == 0
    assert run.threads == 1


def test_parse_args_rejects():
    with pytest.raises(click.UsageError):
        parse_args([])
    with pytest.raises(click.UsageError, match="grid_n"):
        parse_args(["barcode", "sublevel", "--formula", "x <= 0", "--poly", "x",
                    "--radius", "1", "--grid", "1"])  # fmt: skip
    with pytest.raises(click.UsageError, match="needs"):
        parse_args(["roots", "order"])


def test_parse_args_examples(tmp_path):
    points = tmp_path / "p.csv"
    points.write_text("0,0\n")
    run = parse_args(["barcode", "rips", "--points", str(points), "--max-dim", "1"])
    assert run.verb == "rips"
    assert run.max_dim == 1
    assert run.points_path == points
    with pytest.raises(click.UsageError, match="formula"):
        parse_args(["barcode", "sublevel", "--poly", "x", "--radius", "1"])
    with pytest.raises(click.UsageError):
        parse_args(["barcode", "sublevel", "--formula", "x <= 0", "--poly", "x", "--radius", "1/0"])
