"""CSV discovery and loading for figure rendering.

Inputs follow the experiment layout: summary.csv at the root and run
directories at <strategy>/P<peers>/lam<rate>/run<r>/.  Every loader
validates the columns it needs and raises InputError with the offending
file and column name, so the CLI can fail before any image is written.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from pathlib import Path


class InputError(Exception):
    """A missing, empty, or schema-violating input file."""


SUMMARY_BASE_COLUMNS = ("strategy", "peers", "tx_rate")


@dataclass(frozen=True)
class RunFile:
    strategy: str
    peers: int
    tx_rate: float
    replication: int
    path: str


def load_summary(in_dir, columns) -> list[dict]:
    """Rows of summary.csv with the base columns parsed; `columns` required."""
    path = os.path.join(in_dir, "summary.csv")
    if not os.path.isfile(path):
        raise InputError(f"{path}: not found")
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        for col in (*SUMMARY_BASE_COLUMNS, *columns):
            if col not in fields:
                raise InputError(f"summary.csv: missing column '{col}'")
        rows = []
        for row in reader:
            row["peers"] = int(row["peers"])
            row["tx_rate"] = float(row["tx_rate"])
            rows.append(row)
    if not rows:
        raise InputError("summary.csv: no data rows")
    return rows


def find_runs(in_dir, filename, peers=None, tx_rate=None) -> list[RunFile]:
    """Per-run files of one name under in_dir, optionally filtered by cell."""
    found = []
    for path in sorted(Path(in_dir).glob(f"*/P*/lam*/run*/{filename}")):
        strategy, p_part, lam_part, run_part = path.parts[-5:-1]
        run = RunFile(strategy, int(p_part[1:]), float(lam_part[3:]),
                      int(run_part[3:]), str(path))
        if peers is not None and run.peers != peers:
            continue
        if tx_rate is not None and run.tx_rate != tx_rate:
            continue
        found.append(run)
    if not found:
        raise InputError(f"{in_dir}: no run directories with {filename}"
                         + _filter_note(peers, tx_rate))
    return found


def _filter_note(peers, tx_rate) -> str:
    parts = []
    if peers is not None:
        parts.append(f"peers={peers}")
    if tx_rate is not None:
        parts.append(f"tx_rate={tx_rate:g}")
    return f" matching {', '.join(parts)}" if parts else ""


def read_column(path, column) -> list[float]:
    """Float values of one column, skipping empty cells."""
    name = os.path.basename(path)
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if column not in (reader.fieldnames or []):
            raise InputError(f"{name}: missing column '{column}'")
        return [float(row[column]) for row in reader if row[column] != ""]


def read_columns(path, columns) -> list[tuple]:
    """Row tuples of several columns, skipping rows with any empty cell."""
    name = os.path.basename(path)
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        for col in columns:
            if col not in fields:
                raise InputError(f"{name}: missing column '{col}'")
        return [tuple(float(row[c]) for c in columns) for row in reader
                if all(row[c] != "" for c in columns)]
