from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import tabulate

from .exactmath import Interval, format_rational

__all__ = ("FORMATS", "Report", "plain", "render")

FORMATS = ("text", "csv", "json", "md")


def plain(value: Any) -> Any:
    """Converts a value to its JSON form, rationals as "p/q" and intervals as "[lo,hi]"."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Interval):
        return str(value)
    if isinstance(value, (int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


def _cell(value: Any) -> Any:
    value = plain(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, list):
        return ",".join(map(str, value))
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    return value


@dataclass
class Report:
    records: list[dict[str, Any]] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)
    title: Optional[str] = None

    @property
    def columns(self) -> list[str]:
        columns: list[str] = []
        for record in self.records:
            columns.extend(key for key in record if key not in columns)
        return columns

    def rows(self) -> list[list[Any]]:
        return [[_cell(record.get(column)) for column in self.columns] for record in self.records]


def _table(report: Report, tablefmt: str) -> str:
    parts = []
    if report.title:
        parts.append(f"## {report.title}" if tablefmt == "github" else report.title)
    if report.records:
        # keep "1/9" and "[a,b]" exactly as written
        parts.append(tabulate.tabulate(report.rows(), headers=report.columns, tablefmt=tablefmt, disable_numparse=True))
    parts.extend(report.summary)
    return "\n".join(parts)


def _csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(report.columns)
    writer.writerows(report.rows())
    return buffer.getvalue().rstrip("\n")


def _json(report: Report) -> str:
    return "\n".join(json.dumps(plain(record), separators=(",", ":")) for record in report.records)


def render(report: Report, fmt: str = "text") -> str:
    if fmt == "text":
        return _table(report, "simple")
    if fmt == "md":
        return _table(report, "github")
    if fmt == "csv":
        return _csv(report)
    if fmt == "json":
        return _json(report)
    raise ValueError(f"unknown format {fmt!r}, expected one of {', '.join(FORMATS)}")
