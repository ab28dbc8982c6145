# -*- coding: utf-8 -*-
"""
This module provides the machine-readable reports produced by each command,
together with deterministic JSON and CSV writers for them.
"""
__all__ = ("Report", "to_csv", "to_json")

import csv
import io
import json
import math
import typing as t
from typing import Any, Dict, List, Optional, Sequence

import attr

from .config import RunConfig
from .. import exceptions as exc
from ..version import __version__


@attr.s(frozen=True, slots=True, auto_attribs=True)
class Report:
    """The outcome of a single command.

    Attributes
    ----------
    config: RunConfig
        The configuration that produced this report.
    result: Dict[str, Any]
        The command-specific payload.
    table: Sequence[Dict[str, Any]], optional
        Rows of the grid or sweep, if any, used for CSV output.
    passed: bool, optional
        Whether the scientific check performed by the command passed, or
        :code:`None` if the command performs no such check.
    duration_ms: float, optional
        The wall-clock duration of the command, if timing was requested.
    version: str
        The version of infoclone that produced this report.
    """

    config: RunConfig
    result: Dict[str, Any]
    table: Optional[Sequence[Dict[str, Any]]] = None
    passed: Optional[bool] = None
    duration_ms: Optional[float] = None
    version: str = __version__

    def with_duration(self, duration_ms: float) -> "Report":
        return attr.evolve(self, duration_ms=duration_ms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "result": self.result,
            "version": self.version,
            "duration_ms": self.duration_ms,
        }

    def render(self) -> str:
        """Renders this report in the configured output format.

        Raises
        ------
        UsageError
            If CSV output is requested for a command without a table.
        """
        if self.config.output_format == "csv":
            if self.table is None:
                raise exc.UsageError(
                    f"csv output is not available for {self.config.command}"
                )
            return to_csv(self.table)
        return to_json(self.to_dict())


def _number(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialise non-finite number: {value}")
    return format(value, ".17g")


def _encode(value: Any, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _number(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(value[k], indent + 1)}"
                 for k in sorted(value)]
        return "{\n" + ",\n".join(items) + f"\n{end}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{end}]"
    if hasattr(value, "item"):
        return _encode(value.item(), indent)
    raise TypeError(f"cannot serialise value of type {type(value).__name__}")


def to_json(payload: Dict[str, Any]) -> str:
    """Serialises a payload as JSON with sorted keys and numbers written to
    17 significant digits."""
    return _encode(payload, 0) + "\n"


def _cell(value: Any) -> t.Union[str, int]:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _number(value)
    if value is None:
        return ""
    return value


def to_csv(rows: Sequence[Dict[str, Any]]) -> str:
    """Serialises a table as CSV with a header row and CRLF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    header: List[str] = list(rows[0]) if rows else []
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row[column]) for column in header])
    return buffer.getvalue()
