"""
Rendering of report models as JSON, CSV or rich tables.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

from rich.console import Console
from rich.table import Table

from src.exceptions import UsageError
from src.schemas import (
    GramReport,
    GrassmannReport,
    PolyReport,
    ReflectionReport,
    ReportModel,
    SpectrumReport,
)


def format_float(value: Optional[float]) -> str:
    """17 significant digits, enough to round-trip a double."""

    return "" if value is None else f"{value:.17g}"


def to_json(report: ReportModel) -> str:
    payload = report.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _label(weight: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in weight) + ")"


def _tables(report: ReportModel) -> List[Table]:
    """Tables describing the report, in display order."""

    if isinstance(report, PolyReport):
        table = Table(
            "lambda", "mu", "coefficient", title="Koornwinder polynomials"
        )
        for entry in report.entries:
            lam = _label(entry.polynomial.lam)
            for coeff in entry.polynomial.coeffs:
                table.add_row(lam, _label(coeff.mu), coeff.c)
        return [table]
    if isinstance(report, SpectrumReport):
        table = Table(
            "lambda", "diagonal", "eigenvalue", "matches", title="Spectrum"
        )
        for row in report.rows:
            table.add_row(
                _label(row.lam), row.diagonal, row.eigenvalue, str(row.matches)
            )
        return [table]
    if isinstance(report, GramReport):
        labels = [_label(w) for w in report.weights]
        gram = Table("", *labels, title=f"Gram matrix N={report.N} M={report.M}")
        for label, row in zip(labels, report.matrix):
            gram.add_row(label, *(format_float(v) for v in row))
        steps = Table(
            "N", "M", "max_offdiag", "skipped_points", "max_delta", title="Convergence"
        )
        for step in report.convergence:
            steps.add_row(
                str(step.N),
                str(step.M),
                format_float(step.max_offdiag),
                str(step.skipped_points),
                format_float(step.max_delta),
            )
        return [gram, steps]
    if isinstance(report, ReflectionReport):
        title = f"Reflection n={report.n} l={report.l}"
        table = Table("check", "max |residual|", title=title)
        table.add_row("reflection", report.residual_max)
        table.add_row("yang-baxter", report.yang_baxter_max)
        table.add_row("hecke", report.hecke_max)
        table.add_row("symmetric J", str(report.symmetric))
        return [table]
    if isinstance(report, GrassmannReport):
        params = Table("parameter", "value", title="Mapped parameters")
        for name, value in report.params.model_dump().items():
            params.add_row(name, value)
        params.add_row("abcd", report.abcd)
        params.add_row("kappa", report.kappa or "")
        rows = Table("mu", "e(mu)", "casimir shift", "matches", title="Radial check")
        for row in report.rows:
            rows.add_row(
                _label(row.mu), row.eigenvalue, row.casimir_shift, str(row.matches)
            )
        return [params, rows]
    raise UsageError(f"no table layout for {type(report).__name__}")


def to_csv(report: ReportModel) -> str:
    if isinstance(report, GramReport):
        labels = [_label(w) for w in report.weights]
        matrix = [[""] + labels] + [
            [label] + [format_float(v) for v in row]
            for label, row in zip(labels, report.matrix)
        ]
        steps = [["N", "M", "max_offdiag", "skipped_points", "max_delta"]] + [
            [
                step.N,
                step.M,
                format_float(step.max_offdiag),
                step.skipped_points,
                format_float(step.max_delta),
            ]
            for step in report.convergence
        ]
        return _csv_text(matrix) + "\n" + _csv_text(steps)
    blocks = []
    for table in _tables(report):
        header = [str(column.header) for column in table.columns]
        cells = [list(column.cells) for column in table.columns]
        body = [list(row) for row in zip(*cells)] if cells else []
        blocks.append(_csv_text([header] + body))
    return "\n".join(blocks)


def to_pretty(report: ReportModel) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=120, force_terminal=False)
    for table in _tables(report):
        console.print(table)
    verdict = "PASS" if report.passed else "FAIL"
    console.print(f"{verdict} [{', '.join(report.equations)}]", markup=False)
    return buffer.getvalue()


RENDERERS = {"json": to_json, "csv": to_csv, "pretty": to_pretty}


def render(report: ReportModel, fmt: str) -> str:
    try:
        renderer = RENDERERS[fmt]
    except KeyError as exc:
        raise UsageError(f"unknown format {fmt!r}") from exc
    return renderer(report)


def emit(report: ReportModel, fmt: str, out: Optional[Path], stream) -> None:
    text = render(report, fmt)
    if out is None:
        stream.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
