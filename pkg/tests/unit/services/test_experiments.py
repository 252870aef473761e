"""
Tests for the experiment runners.

Scans over all trees stay at small orders; the full ranges run in the
integration suite.
"""

import pytest

from wspec.exceptions import InvalidParameterError
from wspec.models.report import EXPECTED_FAIL, PASS, SKIP
from wspec.models.trees import path, star
from wspec.models.weight_function import (
    custom_weight,
    first_gourava,
    second_zagreb,
    sombor,
)
from wspec.services.experiments import (
    TABLE1_TREES,
    radii,
    run_collapse_check,
    run_double_star_chain,
    run_extremal_scan,
    run_kelmans_check,
    run_path_bounds,
    run_property_report,
    run_star_or_double_star,
    run_table1,
)


def test_radii_keeps_input_order(sombor_f):
    graphs = [star(6), path(6), star(4)]
    serial = radii(graphs, sombor_f)
    assert serial[0] > serial[2]
    assert radii(graphs, sombor_f, jobs=2) == pytest.approx(serial, rel=1e-15)


def test_table1_reproduces_reference_grid():
    report = run_table1()
    assert report.passed
    assert len(report.rows) == 40
    argmax = {r.values["function"]: r.values["tree"] for r in report.rows if r.label.endswith("argmax")}
    assert argmax["x+y+xy"] == "S_15"
    assert set(argmax.values()) == {"S_15", "S_{7,8}"}


def test_table1_star_cell():
    row = run_table1().rows[0]
    assert row.values["tree"] == TABLE1_TREES[0]
    assert row.values["rho"] == pytest.approx(14 ** 1.5, rel=1e-12)


def test_table1_tight_tolerance_fails():
    report = run_table1(tolerance=1e-6)
    assert not report.passed
    assert report.first_failure.values["deviation"] != 0


def test_extremal_scan_restricted(sombor_f):
    report = run_extremal_scan(sombor_f, 1, 9, jobs=1)
    assert report.passed
    assert report.notes["restricted"] is True
    last = report.rows[-1].values
    assert (last["argmin"], last["argmax"], last["trees"]) == ("P_9", "S_9", 47)
    assert last["min_margin"] > 0 and last["max_margin"] > 0
    assert report.rows[0].detail == "single tree"


def test_double_star_scan_of_non_restricted_function():
    report = run_extremal_scan(second_zagreb(), 15, 15, family="double_star", jobs=1)
    assert report.passed
    assert report.notes["restricted"] is False
    row = report.rows[0]
    assert row.status == EXPECTED_FAIL
    assert row.values["argmax"] == "S_{7,8}"


def test_double_star_scan_beyond_enumeration_cap():
    report = run_extremal_scan(first_gourava(), 30, 30, family="double_star", jobs=1)
    assert report.rows[0].values["argmax"] == "S_30"


def test_scan_arguments(sombor_f):
    with pytest.raises(InvalidParameterError):
        run_extremal_scan(sombor_f, 5, 4)
    with pytest.raises(InvalidParameterError):
        run_extremal_scan(sombor_f, 3, 3, family="double_star")
    with pytest.raises(InvalidParameterError):
        run_extremal_scan(sombor_f, 3, 4, family="paths")


def test_maximum_is_star_or_double_star():
    report = run_star_or_double_star(second_zagreb(), 4, 9, jobs=1)
    assert report.passed
    assert {r.values["argmax_family"] for r in report.rows} <= {"star", "double_star"}


def test_kelmans_check(sombor_f):
    report = run_kelmans_check(sombor_f, 8, 20, seed=1)
    assert report.passed
    assert len(report.rows) == 20
    assert [r.values["graph"] for r in report.rows[:2]] == ["gnp", "tree"]
    assert report.notes["min_gap"] is None or report.notes["min_gap"] > 0


def test_kelmans_check_is_reproducible(sombor_f):
    first = run_kelmans_check(sombor_f, 7, 6, seed=42)
    second = run_kelmans_check(sombor_f, 7, 6, seed=42)
    assert [r.values for r in first.rows] == [r.values for r in second.rows]


def test_collapse_check(sombor_f):
    report = run_collapse_check(sombor_f, 9, 10, seed=3)
    assert report.passed
    assert all(r.status in (PASS, SKIP) for r in report.rows)
    assert {r.values["graph"] for r in report.rows} == {"tree", "glued"}


def test_sampling_order_bounds(sombor_f):
    with pytest.raises(InvalidParameterError):
        run_kelmans_check(sombor_f, 2, 1, seed=0)
    with pytest.raises(InvalidParameterError):
        run_collapse_check(sombor_f, 3, 1, seed=0)


def test_double_star_chain(sombor_f):
    report = run_double_star_chain(sombor_f, 10)
    assert report.passed
    assert [r.label for r in report.rows] == [
        "S_{5,5}", "S_{4,6}", "S_{3,7}", "S_{2,8}", "S_10",
    ]
    assert all(r.values["relative_error"] <= 1e-8 for r in report.rows)
    assert "step_gap" not in report.rows[0].values


def test_double_star_chain_non_restricted():
    report = run_double_star_chain(second_zagreb(), 15)
    assert report.passed
    assert report.counts()[EXPECTED_FAIL] > 0


def test_path_bounds(sombor_f):
    report = run_path_bounds(sombor_f, 8)
    assert report.passed
    checks = [r.values["check"] for r in report.rows]
    assert checks.count("path_upper") == 6
    assert checks.count("caterpillar_lower") == 7
    assert {"star_five", "star_five_lower", "spider_closed_form", "spider_lower"} <= set(checks)


def test_property_report_catalog(sombor_f):
    report = run_property_report(sombor_f, delta=20)
    assert report.passed
    assert [r.values["verdict"] for r in report.rows] == ["pass"] * 4


def test_property_report_non_restricted():
    report = run_property_report(second_zagreb(), delta=20)
    assert report.passed
    restricted = next(r for r in report.rows if r.label == "restricted")
    assert restricted.values["verdict"] == "fail"
    assert restricted.values["counterexample"] == "((1,3),(2,2))"
    assert restricted.values["declared"] is False


def test_property_report_custom_is_informational():
    report = run_property_report(custom_weight("1/x + 1"), delta=5)
    assert report.passed
    assert all(r.values["declared"] is None for r in report.rows)
