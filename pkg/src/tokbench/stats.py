"""Pearson correlation over model metric columns and external scores."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass

from .errors import StatsError

# Column order mirrors the benchmark table: external inputs first, then the
# computed metrics, with fertility as the supplementary last column.
METRIC_COLUMN_ORDER = (
    "params_b",
    "vocab_size",
    "total_tokens",
    "processing_time_s",
    "unique_tokens",
    "pct_tr",
    "pct_pure",
    "fertility",
)


class MetricTable:
    """Named metric columns over an ordered list of models."""

    def __init__(self, models, columns):
        self.models: list[str] = list(models)
        self.columns: dict[str, list[float]] = {}
        if not self.models:
            raise StatsError("metric table needs at least one model")
        if len(set(self.models)) != len(self.models):
            raise StatsError("model names must be unique")
        for name, values in columns.items():
            values = [float(v) for v in values]
            if len(values) != len(self.models):
                raise StatsError(
                    f"column {name!r} has {len(values)} values for {len(self.models)} models"
                )
            self.columns[name] = values

    @classmethod
    def from_reports(cls, reports) -> "MetricTable":
        """Build a table from evaluation reports.

        ``params_b``, ``fertility``, and each external score become columns
        only when present for every model; external score names must agree
        across reports.
        """
        if not reports:
            raise StatsError("no reports to tabulate")
        models = [r.model_name for r in reports]
        score_names = sorted(reports[0].external_scores)
        for report in reports:
            if sorted(report.external_scores) != score_names:
                raise StatsError(
                    f"model {report.model_name!r} has mismatched external score names"
                )
        columns: dict[str, list[float]] = {}
        if all(r.params_b is not None for r in reports):
            columns["params_b"] = [r.params_b for r in reports]
        for name in score_names:
            columns[name] = [r.external_scores[name] for r in reports]
        for name in ("vocab_size", "total_tokens", "processing_time_s",
                     "unique_tokens", "pct_tr", "pct_pure"):
            columns[name] = [getattr(r, name) for r in reports]
        if all(r.fertility is not None for r in reports):
            columns["fertility"] = [r.fertility for r in reports]
        return cls(models, columns)

    def column(self, name: str) -> list[float]:
        if name not in self.columns:
            raise StatsError(f"unknown column {name!r}")
        return self.columns[name]

    def select(self, names) -> "MetricTable":
        return MetricTable(self.models, {name: self.column(name) for name in names})


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    r: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.r) != n or any(len(row) != n for row in self.r):
            raise StatsError("correlation matrix must be square over its labels")
        for i in range(n):
            if self.r[i][i] != 1.0:
                raise StatsError("correlation matrix diagonal must be exactly 1")
            for j in range(n):
                if abs(self.r[i][j]) > 1 + 1e-12:
                    raise StatsError(f"|r| > 1 at ({self.labels[i]}, {self.labels[j]})")
                if self.r[i][j] != self.r[j][i]:
                    raise StatsError("correlation matrix must be symmetric")

    def entry(self, a: str, b: str) -> float:
        try:
            i = self.labels.index(a)
            j = self.labels.index(b)
        except ValueError as exc:
            raise StatsError(f"unknown label in ({a!r}, {b!r})") from exc
        return self.r[i][j]

    def pairs(self):
        """Yield (label_a, label_b, r) for every unordered off-diagonal pair."""
        for i in range(len(self.labels)):
            for j in range(i + 1, len(self.labels)):
                yield self.labels[i], self.labels[j], self.r[i][j]


def pearson(x, y) -> float:
    """Product-moment correlation, two-pass with compensated summation."""
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    if len(x) != len(y):
        raise StatsError(f"length mismatch ({len(x)} vs {len(y)})")
    n = len(x)
    if n < 2:
        raise StatsError("pearson needs at least 2 points")
    mean_x = math.fsum(x) / n
    mean_y = math.fsum(y) / n
    dx = [v - mean_x for v in x]
    dy = [v - mean_y for v in y]
    sxx = math.fsum(d * d for d in dx)
    syy = math.fsum(d * d for d in dy)
    if sxx == 0.0 or syy == 0.0:
        raise StatsError("zero variance")
    sxy = math.fsum(a * b for a, b in zip(dx, dy))
    return sxy / math.sqrt(sxx * syy)


def correlation_matrix(table: MetricTable) -> CorrelationMatrix:
    """Pairwise Pearson over all table columns; symmetric with unit diagonal."""
    labels = list(table.columns)
    if len(table.models) < 2:
        raise StatsError("correlation needs at least 2 models")
    for name in labels:
        values = table.columns[name]
        if min(values) == max(values):
            raise StatsError(f"column {name!r} has zero variance")
    n = len(labels)
    grid = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = pearson(table.columns[labels[i]], table.columns[labels[j]])
            grid[i][j] = value
            grid[j][i] = value
    return CorrelationMatrix(labels=tuple(labels), r=tuple(tuple(row) for row in grid))


def rank_models(table: MetricTable, key: str) -> list[str]:
    """Model names in descending order of one column; ties break by name."""
    values = table.column(key)
    order = sorted(zip(table.models, values), key=lambda mv: (-mv[1], mv[0]))
    return [model for model, _ in order]


def write_table_csv(table: MetricTable, path) -> None:
    """Persist a metric table (models as rows, full float precision)."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["model"] + list(table.columns))
        for i, model in enumerate(table.models):
            row = [model]
            for values in table.columns.values():
                value = values[i]
                row.append(int(value) if float(value).is_integer() else repr(value))
            writer.writerow(row)


def read_table_csv(path) -> MetricTable:
    """Load a metric table written by :func:`write_table_csv` (or compatible)."""
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if len(rows) < 2:
        raise StatsError(f"{path}: need a header row and at least one model row")
    header = rows[0]
    if len(header) < 2:
        raise StatsError(f"{path}: need a model column and at least one metric column")
    models = []
    columns: dict[str, list[float]] = {name: [] for name in header[1:]}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise StatsError(f"{path}: line {lineno}: expected {len(header)} cells")
        models.append(row[0])
        for name, cell in zip(header[1:], row[1:]):
            try:
                columns[name].append(float(cell))
            except ValueError:
                raise StatsError(
                    f"{path}: line {lineno}: non-numeric value {cell!r} in column {name!r}"
                ) from None
    return MetricTable(models, columns)


def write_matrix_csv(matrix: CorrelationMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([""] + list(matrix.labels))
        for label, row in zip(matrix.labels, matrix.r):
            writer.writerow([label] + [repr(v) for v in row])


def read_matrix_csv(path) -> CorrelationMatrix:
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows:
        raise StatsError(f"{path}: empty matrix file")
    labels = tuple(rows[0][1:])
    grid = []
    for row in rows[1:]:
        grid.append(tuple(float(cell) for cell in row[1:]))
    return CorrelationMatrix(labels=labels, r=tuple(grid))


def matrix_to_json(matrix: CorrelationMatrix) -> str:
    return json.dumps(
        {"labels": list(matrix.labels), "r": [list(row) for row in matrix.r]},
        ensure_ascii=False,
        indent=2,
    )
