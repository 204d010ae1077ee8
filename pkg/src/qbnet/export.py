"""Tabular results and their CSV/JSON export.

Every exported CSV starts with ``#``-prefixed metadata lines (the
parameters that produced it), then a header row, then data rows.
Numbers carry 17 significant digits so downstream comparisons against
the oracles are exact.  Failed sweep points never appear as NaN rows;
they go to a sidecar error listing instead.

Byte-identical reruns are part of the contract: the only
non-deterministic line is a ``created`` timestamp, suppressed when
``deterministic`` is set.
"""

from __future__ import annotations

import datetime
import json
import os
from dataclasses import dataclass, field

TOOLKIT_VERSION = "0.1.0"


def format_number(value) -> str:
    """17-significant-digit decimal form (exact round trip for floats)."""
    return format(float(value), ".17g")


@dataclass
class SweepTable:
    """Column-named numeric rows plus metadata and per-point errors.

    ``errors`` holds ``(row_index, point_label, message)`` triples for
    points that failed; their rows are absent from ``rows``.
    """

    name: str
    columns: tuple
    rows: list
    metadata: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(
                    f"table {self.name!r}: row width {len(row)} != "
                    f"{len(self.columns)} columns")


def _metadata_lines(table: SweepTable, deterministic: bool):
    lines = [f"# table = {table.name}", f"# toolkit_version = {TOOLKIT_VERSION}"]
    if not deterministic:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
        lines.append(f"# created = {stamp}")
    for key in sorted(table.metadata):
        lines.append(f"# {key} = {table.metadata[key]}")
    return lines


def write_csv(table: SweepTable, path: str, deterministic: bool = False) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in _metadata_lines(table, deterministic):
            fh.write(line + "\n")
        fh.write(",".join(table.columns) + "\n")
        for row in table.rows:
            fh.write(",".join(format_number(v) for v in row) + "\n")


def write_errors_csv(table: SweepTable, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("row_index,point,error\n")
        for index, point, message in table.errors:
            text = str(message).replace('"', "'")
            fh.write(f'{index},{format_number(point)},"{text}"\n')


def write_json(table: SweepTable, path: str, deterministic: bool = False) -> None:
    doc = {
        "table": table.name,
        "toolkit_version": TOOLKIT_VERSION,
        "metadata": {k: table.metadata[k] for k in sorted(table.metadata)},
        "columns": list(table.columns),
        "rows": [[float(v) for v in row] for row in table.rows],
        "errors": [{"row_index": i, "point": p, "error": str(m)}
                   for i, p, m in table.errors],
    }
    if not deterministic:
        doc["created"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def write_table(table: SweepTable, out_dir: str, fmt: str = "csv",
                deterministic: bool = False) -> list:
    """Write a table (and its error sidecar, if any); return the paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    if fmt == "csv":
        path = os.path.join(out_dir, f"{table.name}.csv")
        write_csv(table, path, deterministic)
        paths.append(path)
        if table.errors:
            err_path = os.path.join(out_dir, f"{table.name}_errors.csv")
            write_errors_csv(table, err_path)
            paths.append(err_path)
    elif fmt == "json":
        path = os.path.join(out_dir, f"{table.name}.json")
        write_json(table, path, deterministic)
        paths.append(path)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return paths


def table_to_csv_text(table: SweepTable, deterministic: bool = True) -> str:
    """The CSV document as a string (stdout printing path)."""
    lines = _metadata_lines(table, deterministic)
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(format_number(v) for v in row))
    return "\n".join(lines) + "\n"
