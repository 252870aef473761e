"""
report.py
---------

ExperimentReport: the uniform result of every harness experiment.

A report carries its parameters, an ordered column list, one row per
instance and free-form notes. Row status is one of pass, fail, expected-fail
(a failure the function's missing properties predict) or skip. A report
passes iff no row failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected-fail"
SKIP = "skip"
STATUSES = (PASS, FAIL, EXPECTED_FAIL, SKIP)


@dataclass
class ReportRow:
    label: str
    status: str
    values: dict = field(default_factory=dict)
    detail: str = ""


@dataclass
class ExperimentReport:
    """Rows of one experiment run plus the parameters that reproduce it."""

    experiment: str
    parameters: dict
    columns: list
    rows: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add_row(self, label: str, status: str, detail: str = "", **values: Any):
        if status not in STATUSES:
            raise ValueError(f"unknown row status {status!r}")
        unknown = set(values) - set(self.columns)
        if unknown:
            raise ValueError(f"columns {sorted(unknown)} not declared")
        row = ReportRow(label, status, values, detail)
        self.rows.append(row)
        return row

    @property
    def passed(self) -> bool:
        return all(row.status != FAIL for row in self.rows)

    @property
    def verdict(self) -> str:
        return PASS if self.passed else FAIL

    @property
    def first_failure(self) -> Optional[ReportRow]:
        return next((row for row in self.rows if row.status == FAIL), None)

    def counts(self) -> dict:
        """Number of rows per status."""
        return {s: sum(1 for row in self.rows if row.status == s) for s in STATUSES}
