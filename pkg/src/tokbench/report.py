"""Rendering of evaluation reports: JSON, CSV, and Markdown.

JSON and CSV keep full float precision; Markdown applies the display
rounding used throughout the toolkit (percent metrics and seconds to 2
decimals, fertility to 3).
"""

from __future__ import annotations

import json

from .metrics import EvalReport
from .stats import CorrelationMatrix, MetricTable, write_table_csv


def _fmt(value, decimals: int) -> str:
    return f"{value:.{decimals}f}"


def _fmt_general(value) -> str:
    text = f"{value:g}"
    return text


# (attribute, label, formatter); external scores are inserted after params.
_ROW_SPECS = (
    ("vocab_size", "Vocabulary Size", str),
    ("total_tokens", "Token Count", str),
    ("processing_time_s", "Processing Time (s)", lambda v: _fmt(v, 2)),
    ("unique_tokens", "Unique Tokens", str),
    ("pct_tr", "TR %", lambda v: _fmt(v, 2)),
    ("pct_pure", "Pure %", lambda v: _fmt(v, 2)),
)


def _report_rows(report: EvalReport) -> list[tuple[str, str]]:
    rows = [("Parameters (B)", "-" if report.params_b is None else _fmt_general(report.params_b))]
    for name in sorted(report.external_scores):
        rows.append((f"{name.upper()} Score (%)", _fmt(report.external_scores[name], 2)))
    for attr, label, fmt in _ROW_SPECS:
        rows.append((label, fmt(getattr(report, attr))))
    if report.fertility is not None:
        rows.append(("Fertility (tokens/word)", _fmt(report.fertility, 3)))
    return rows


def render_report_markdown(report: EvalReport) -> str:
    lines = [f"| Metric | {report.model_name} |", "| --- | --- |"]
    lines.extend(f"| {label} | {value} |" for label, value in _report_rows(report))
    return "\n".join(lines) + "\n"


def render_comparison_markdown(reports) -> str:
    """Benchmark-table layout: one column per model, one row per metric."""
    if not reports:
        raise ValueError("no reports to render")
    per_model = [dict(_report_rows(r)) for r in reports]
    labels: list[str] = []
    for rows in ([label for label, _ in _report_rows(r)] for r in reports):
        for label in rows:
            if label not in labels:
                labels.append(label)
    header = "| Metric | " + " | ".join(r.model_name for r in reports) + " |"
    rule = "| --- |" + " --- |" * len(reports)
    lines = [header, rule]
    for label in labels:
        cells = [rows.get(label, "-") for rows in per_model]
        lines.append(f"| {label} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def reports_to_json(reports) -> str:
    payload = [r.to_dict() for r in reports]
    if len(payload) == 1:
        return json.dumps(payload[0], ensure_ascii=False, indent=2)
    return json.dumps(payload, ensure_ascii=False, indent=2)


def write_reports_csv(reports, path) -> None:
    """Persist reports as a metric-table CSV (one row per model)."""
    write_table_csv(MetricTable.from_reports(list(reports)), path)


def render_matrix_markdown(matrix: CorrelationMatrix) -> str:
    header = "| | " + " | ".join(matrix.labels) + " |"
    rule = "| --- |" + " --- |" * len(matrix.labels)
    lines = [header, rule]
    for label, row in zip(matrix.labels, matrix.r):
        lines.append(f"| {label} | " + " | ".join(_fmt(v, 2) for v in row) + " |")
    return "\n".join(lines) + "\n"
