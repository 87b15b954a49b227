"""Data ingestion, report building, and CSV/JSON serialization.

Patterns serialize as parenthesized comma lists, e.g. ``(3,1,4,2)``.  Reports
follow the ``opr-report/1`` JSON schema; evolution is additive only.  Default
reports are byte-identical for identical inputs and configuration: measured
wall time is only embedded when explicitly requested.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .core import Pattern
from .features import FeatureMatrix
from .miner import MinerConfig, MiningResult, OpRule

REPORT_SCHEMA = "opr-report/1"


class ParseError(ValueError):
    """A token could not be parsed as a finite real; carries the line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class EmptySeries(ValueError):
    """The input file produced no values."""


def _parse_real(token: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"line {line}: cannot parse {token!r} as a real number", line) from None
    if not math.isfinite(value):
        raise ParseError(f"line {line}: non-finite value {token!r}", line)
    return value


def load_series(path: str | Path, format: str = "plain", column: str | None = None) -> list[float]:
    """Load one series: ``plain`` is one real per line (blank lines skipped),
    ``csv`` takes the first column, or a named column when ``column`` is given
    (which requires a header row)."""
    path = Path(path)
    values: list[float] = []
    if format == "plain":
        with open(path) as fh:
            for lineno, raw in enumerate(fh, start=1):
                token = raw.strip()
                if not token:
                    continue
                values.append(_parse_real(token, lineno))
    elif format == "csv":
        with open(path, newline="") as fh:
            if column is not None:
                reader = csv.DictReader(fh)
                if reader.fieldnames is None or column not in reader.fieldnames:
                    raise ParseError(f"line 1: no column named {column!r}", 1)
                for lineno, row in enumerate(reader, start=2):
                    values.append(_parse_real(row[column], lineno))
            else:
                for lineno, row in enumerate(csv.reader(fh), start=1):
                    if not row or not row[0].strip():
                        continue
                    values.append(_parse_real(row[0].strip(), lineno))
    else:
        raise ValueError(f"unknown format {format!r}; expected 'plain' or 'csv'")
    if not values:
        raise EmptySeries(f"{path}: no values found")
    return values


@dataclass
class DatasetManifest:
    """Dataset description: per-sequence file paths and optional labels."""

    entries: list[tuple[Path, str | None]]
    format: str = "plain"

    @property
    def labels(self) -> list[str] | None:
        labels = [label for _, label in self.entries]
        return None if any(l is None for l in labels) else labels  # noqa: E741


def load_manifest(path: str | Path) -> DatasetManifest:
    """Load a JSON manifest: {"format": "plain", "entries": [{"path": ...,
    "label": ...}, ...]}.  Paths resolve relative to the manifest file;
    labels must be all present or all absent."""
    path = Path(path)
    with open(path) as fh:
        doc = json.load(fh)
    fmt = doc.get("format", "plain")
    if fmt not in ("plain", "csv"):
        raise ValueError(f"manifest format must be 'plain' or 'csv', got {fmt!r}")
    entries: list[tuple[Path, str | None]] = []
    for item in doc["entries"]:
        entry_path = (path.parent / item["path"]).resolve()
        if not entry_path.exists():
            raise FileNotFoundError(f"manifest entry not found: {entry_path}")
        label = item.get("label")
        entries.append((entry_path, None if label is None else str(label)))
    if not entries:
        raise ValueError("manifest has no entries")
    labelled = [label for _, label in entries if label is not None]
    if labelled and len(labelled) != len(entries):
        raise ValueError("manifest labels must be all present or all absent")
    return DatasetManifest(entries, fmt)


def load_dataset(
    manifest: DatasetManifest, column: str | None = None
) -> tuple[list[list[float]], list[str] | None]:
    dataset = [load_series(p, manifest.format, column) for p, _ in manifest.entries]
    return dataset, manifest.labels


def format_pattern(p: Pattern) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def parse_pattern(text: str) -> Pattern:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a pattern string: {text!r}")
    return tuple(int(tok) for tok in body[1:-1].split(","))


def _sorted_patterns(result: MiningResult) -> list[Pattern]:
    return sorted(result.frequent, key=lambda p: (len(p), p))


def build_report(
    config: MinerConfig,
    result: MiningResult,
    rules: Sequence[OpRule] | None = None,
    metrics: dict[str, float] | None = None,
    *,
    emit_occurrences: bool = False,
    include_timing: bool = False,
    input_echo: dict | None = None,
) -> dict:
    """Assemble the report dict.  Frequent patterns sort by (length, ranks);
    rules sort by confidence descending."""
    frequent_rows = []
    for p in _sorted_patterns(result):
        occ = result.frequent[p]
        row: dict = {
            "pattern": format_pattern(p),
            "length": len(p),
            "support": occ.support,
        }
        if emit_occurrences:
            row["occurrences"] = [list(e) for e in occ.ends]
        frequent_rows.append(row)
    report: dict = {
        "schema": REPORT_SCHEMA,
        "config": {
            "minsup": config.minsup,
            "minconf": config.minconf,
            "variant": config.variant,
            "max_pattern_len": config.max_pattern_len,
            **(input_echo or {}),
        },
        "frequent": frequent_rows,
        "counters": {
            "candidates_checked": result.stats.candidates_checked,
            "element_comparisons": result.stats.element_comparisons,
            # measured timing breaks byte-identical reports, so it is opt-in
            "wall_time_ms": round(result.stats.wall_time_ms, 3) if include_timing else None,
        },
    }
    if rules is not None:
        ordered = sorted(rules, key=lambda r: (-r.confidence, r.antecedent, r.consequent))
        report["rules"] = [
            {
                "antecedent": format_pattern(r.antecedent),
                "consequent": format_pattern(r.consequent),
                "sup_x": r.sup_x,
                "sup_y": r.sup_y,
                "confidence": r.confidence,
            }
            for r in ordered
        ]
    if metrics is not None:
        report["metrics"] = metrics
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def frequent_csv(result: MiningResult, *, emit_occurrences: bool = False) -> str:
    buf = _stdio.StringIO()
    writer = csv.writer(buf)
    header = ["pattern", "length", "support"]
    if emit_occurrences:
        header.append("occurrences")
    writer.writerow(header)
    for p in _sorted_patterns(result):
        occ = result.frequent[p]
        row = [format_pattern(p), len(p), occ.support]
        if emit_occurrences:
            row.append(";".join(" ".join(map(str, e)) for e in occ.ends))
        writer.writerow(row)
    return buf.getvalue()


def rules_csv(rules: Sequence[OpRule]) -> str:
    buf = _stdio.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["antecedent", "consequent", "sup_x", "sup_y", "confidence"])
    for r in sorted(rules, key=lambda r: (-r.confidence, r.antecedent, r.consequent)):
        writer.writerow(
            [format_pattern(r.antecedent), format_pattern(r.consequent), r.sup_x, r.sup_y, r.confidence]
        )
    return buf.getvalue()


def feature_matrix_csv(matrix: FeatureMatrix) -> str:
    """Header row of pattern strings (plus a leading ``label`` column when
    labels are present); one row per sequence."""
    buf = _stdio.StringIO()
    writer = csv.writer(buf)
    header = [format_pattern(p) for p in matrix.column_patterns]
    if matrix.row_labels is not None:
        header = ["label"] + header
    writer.writerow(header)
    for i in range(matrix.values.shape[0]):
        row = [str(int(v)) for v in matrix.values[i]]
        if matrix.row_labels is not None:
            row = [matrix.row_labels[i]] + row
        writer.writerow(row)
    return buf.getvalue()


def read_feature_matrix_csv(text: str) -> FeatureMatrix:
    rows = list(csv.reader(_stdio.StringIO(text)))
    if not rows:
        raise ValueError("empty feature matrix CSV")
    header = rows[0]
    has_labels = bool(header) and header[0] == "label"
    pattern_cols = header[1:] if has_labels else header
    patterns = [parse_pattern(col) for col in pattern_cols]
    labels: list[str] | None = [] if has_labels else None
    cells = []
    for row in rows[1:]:
        if not row:
            continue
        if has_labels:
            assert labels is not None
            labels.append(row[0])
            cells.append([int(v) for v in row[1:]])
        else:
            cells.append([int(v) for v in row])
    values = np.array(cells, dtype=np.int64).reshape(len(cells), len(patterns))
    return FeatureMatrix(values, patterns, labels)
