"""
report_writer.py
----------------

Render an ExperimentReport as CSV, JSON or console text.

CSV layout: a header row (label, status, <columns>, detail), one line per
row with floats at 6 significant digits, "# key: value" lines for notes and
a final "# verdict: pass|fail" line. Output depends only on the report, so
identical runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json

from wspec.models.report import ExperimentReport
from wspec.schemas.report_schema import ExperimentReportSchema

report_schema = ExperimentReportSchema()


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def to_csv(report: ExperimentReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["label", "status", *report.columns, "detail"])
    for row in report.rows:
        writer.writerow(
            [row.label, row.status]
            + [format_value(row.values.get(c)) for c in report.columns]
            + [row.detail]
        )
    for key in sorted(report.notes):
        buffer.write(f"# {key}: {format_value(report.notes[key])}\n")
    buffer.write(f"# verdict: {report.verdict}\n")
    return buffer.getvalue()


def to_json(report: ExperimentReport) -> str:
    return json.dumps(report_schema.dump(report), indent=2, sort_keys=True) + "\n"


def to_text(report: ExperimentReport) -> str:
    """Aligned console table followed by a one-line summary."""
    header = ["label", "status", *report.columns]
    lines = [header] + [
        [row.label, row.status] + [format_value(row.values.get(c)) for c in report.columns]
        for row in report.rows
    ]
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in lines]
    for row in report.rows:
        if row.detail and row.status != "pass":
            out.append(f"  {row.label}: {row.detail}")
    counts = ", ".join(f"{k}={v}" for k, v in report.counts().items() if v)
    notes = "".join(f", {k}={format_value(v)}" for k, v in sorted(report.notes.items()))
    out.append(f"{report.experiment}: verdict {report.verdict} ({counts}{notes})")
    return "\n".join(out) + "\n"


def to_property_lines(report: ExperimentReport) -> str:
    """
    One `property: pass|fail(x,y)` line per row of a props report, then the
    same one-line summary as to_text.
    """
    out = []
    for row in report.rows:
        verdict = row.values.get("verdict")
        if verdict == "fail":
            verdict += row.values.get("counterexample") or ""
        out.append(f"{row.label}: {verdict}")
        if row.detail and row.status != "pass":
            out.append(f"  {row.detail}")
    counts = ", ".join(f"{k}={v}" for k, v in report.counts().items() if v)
    out.append(f"{report.experiment}: verdict {report.verdict} ({counts})")
    return "\n".join(out) + "\n"
