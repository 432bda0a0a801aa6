"""Markdown, CSV and JSON rendering of command results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from .engine import ValidSequence
from .errors import DomainError
from .partition import Partition

SCHEMA = 1
FORMATS = ("md", "csv", "json")
STEP_HEADERS = ["partition", "lambda", "k"]


@dataclass
class Report:
    """A result ready for rendering.

    ``fields`` are scalars shown in every format; ``rows`` is an optional
    table under ``headers``; ``extra`` only goes into JSON.
    """
    title: str
    fields: dict[str, Any] = field(default_factory=dict)
    headers: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    rows_key: str = "rows"
    records: bool = False
    extra: dict[str, Any] = field(default_factory=dict)


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def markdown_table(headers: list, rows: list[list]) -> str:
    lines = [
        "| " + " | ".join(_cell(h) for h in headers) + " |",
        "|" + "|".join("---" for _ in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
    return "\n".join(lines)


def _markdown(report: Report) -> str:
    parts = [f"**{report.title}**"]
    if report.fields:
        parts.append(markdown_table(["field", "value"], [[k, v] for k, v in report.fields.items()]))
    if report.headers:
        parts.append(markdown_table(report.headers, report.rows))
    return "\n\n".join(parts)


def _csv(report: Report) -> str:
    keys = list(report.fields)
    values = [_cell(v) for v in report.fields.values()]
    if report.headers:
        columns = keys + [_cell(h) for h in report.headers]
        rows = [values + [_cell(v) for v in row] for row in report.rows]
    else:
        columns, rows = keys, [values]
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_csv(index=False, lineterminator="\n").rstrip("\n")


def _json(report: Report) -> str:
    document = {"schema": SCHEMA, **report.fields, **report.extra}
    if report.headers:
        if report.records:
            document[report.rows_key] = [dict(zip(report.headers, row)) for row in report.rows]
        else:
            document[report.rows_key] = report.rows
    return json.dumps(document, indent=2)


def render(report: Report, fmt: str) -> str:
    """Render a report as 'md', 'csv' or 'json'."""
    if fmt == "md":
        return _markdown(report)
    if fmt == "csv":
        return _csv(report)
    if fmt == "json":
        return _json(report)
    raise DomainError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def certificate_report(title: str, seq: ValidSequence, target: Partition, delta: int, **fields) -> Report:
    """A report whose rows are certificate steps, readable back by the certificate parser."""
    return Report(
        title=title,
        fields={"target": target.to_text(), "delta": delta, **fields},
        headers=list(STEP_HEADERS),
        rows=seq.to_rows(),
        rows_key="steps",
    )
