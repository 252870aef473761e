"""
Tests for the wspec command line.
"""

import json
import math

import pytest
from click.testing import CliRunner

from wspec import __version__
from wspec.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_catalog(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 11
    assert lines[0].split()[0] == "first_zagreb"
    assert "convex,increasing,restricted" in lines[0]


def test_trees_count(runner):
    result = runner.invoke(cli, ["trees", "--n", "8"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "23"


def test_trees_emit(runner):
    result = runner.invoke(cli, ["trees", "--n", "4", "--emit"])
    assert result.exit_code == 0
    blocks = result.stdout.strip().split("\n\n")
    assert len(blocks) == 2
    assert all(block.startswith("4 3\n") for block in blocks)


def test_trees_out_of_range_is_usage_error(runner):
    result = runner.invoke(cli, ["trees", "--n", "99"])
    assert result.exit_code == 2


def test_table1_passes(runner):
    result = runner.invoke(cli, ["table1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "table1: verdict pass (pass=40)"


def test_table1_tight_tolerance_fails(runner):
    result = runner.invoke(cli, ["table1", "--tolerance", "1e-6"])
    assert result.exit_code == 1


def test_chain_json(runner):
    result = runner.invoke(cli, ["chain", "--f", "sombor", "--n", "8", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["verdict"] == "pass"
    assert payload["parameters"] == {"f": "sombor", "n": 8}


@pytest.mark.parametrize(
    "args",
    [
        ["chain", "--n", "8"],
        ["chain", "--f", "nosuch", "--n", "8"],
        ["chain", "--f", "sombor", "--alpha", "2", "--n", "8"],
        ["chain", "--f", "sombor", "--n", "3"],
        ["scan", "--f", "sombor", "--n-lo", "9", "--n-hi", "4"],
        ["kelmans", "--f", "sombor", "--n", "6", "--trials", "0"],
    ],
)
def test_usage_errors(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_scan_writes_csv(runner, tmp_path):
    target = tmp_path / "scan.csv"
    result = runner.invoke(
        cli,
        ["scan", "--f", "sombor", "--n-lo", "4", "--n-hi", "7", "--jobs", "1",
         "--csv", str(target)],
    )
    assert result.exit_code == 0
    text = target.read_text(encoding="utf-8")
    assert text.startswith("label,status,n,trees,argmin,")
    assert "# restricted: true\n" in text
    assert text.endswith("# verdict: pass\n")


def test_scan_of_custom_non_restricted_function(runner):
    result = runner.invoke(
        cli, ["scan", "--f", "x*y", "--n-lo", "4", "--n-hi", "8", "--jobs", "1"]
    )
    assert result.exit_code == 0


def test_props(runner):
    result = runner.invoke(cli, ["props", "--f", "second_zagreb", "--delta", "10"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[:3] == [
        "increasing: pass",
        "convex: pass",
        "restricted: fail((1,3),(2,2))",
    ]
    assert lines[3].startswith("property_p: ")
    assert lines[-1].startswith("props: verdict pass")


def test_props_json_keeps_the_report(runner):
    result = runner.invoke(
        cli, ["props", "--f", "second_zagreb", "--delta", "10", "--json"]
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    restricted = [r for r in payload["rows"] if r["label"] == "restricted"][0]
    assert restricted["values"]["counterexample"] == "((1,3),(2,2))"


def test_kelmans_and_collapse(runner):
    for command in ("kelmans", "collapse"):
        result = runner.invoke(
            cli, [command, "--f", "sombor", "--n", "7", "--trials", "6", "--seed", "5"]
        )
        assert result.exit_code == 0, result.output


def test_pathbounds(runner):
    result = runner.invoke(cli, ["pathbounds", "--f", "forgotten", "--n-hi", "6"])
    assert result.exit_code == 0


def test_radius_of_graph_file(runner, tmp_path):
    graph = tmp_path / "p3.txt"
    graph.write_text("3 2\n0 1\n1 2\n", encoding="utf-8")
    result = runner.invoke(cli, ["radius", "--f", "unit", str(graph), "--spectrum"])
    assert result.exit_code == 0
    first, second = result.stdout.splitlines()
    assert first == f"P_3 f=unit rho={math.sqrt(2):.12g} TI=2"
    assert [float(v) for v in second.split()] == pytest.approx(
        [math.sqrt(2), 0.0, -math.sqrt(2)], abs=1e-12
    )


def test_radius_from_stdin_with_dump(runner):
    result = runner.invoke(
        cli, ["radius", "--f", "sombor", "-", "--dump"], input="4 2\n0 1\n2 3\n"
    )
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "4"
    assert lines[-1].startswith("graph(n=4, m=2) f=sombor rho=1.41421356237")


def test_radius_malformed_graph(runner):
    result = runner.invoke(cli, ["radius", "--f", "sombor", "-"], input="3 2\n0 1\n")
    assert result.exit_code == 1


def test_radius_empty_graph_is_a_data_error(runner):
    result = runner.invoke(cli, ["radius", "--f", "sombor", "-"], input="0 0\n")
    assert result.exit_code == 1
