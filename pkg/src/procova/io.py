"""CSV ingestion and canonical JSON/CSV output.

Trial CSV: header ``y,a,<covariates...>``. Historical CSV: header
``y,<covariates...>`` with the same covariate names in the same order; an
``a`` column in the historical file is allowed and ignored. Every cell must
be a finite number. An intercept column is prepended to both covariate
matrices.

Floats are written at 12 significant digits using the shortest round-trip
representation of the rounded value, so re-serializing a parsed report
reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math
import pathlib

import numpy as np

from .data import HistoricalDataset, TrialDataset
from .exceptions import ProcovaError

__all__ = [
    "SchemaError",
    "read_trial_csv",
    "read_historical_csv",
    "canonical_float",
    "canonicalize",
    "dumps_canonical",
    "write_csv_rows",
]


class SchemaError(ProcovaError, ValueError):
    pass


def _read_rows(path):
    path = pathlib.Path(path)
    try:
        with path.open(newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise SchemaError(f"{path}: missing header row")
    header = [h.strip() for h in rows[0]]
    body = [r for r in rows[1:] if r]
    return path, header, body


def _parse_numeric(path, header, body, columns) -> np.ndarray:
    idx = [header.index(c) for c in columns]
    out = np.empty((len(body), len(idx)))
    for i, row in enumerate(body, start=2):
        if len(row) != len(header):
            raise SchemaError(f"{path}: row {i} has {len(row)} fields, header has {len(header)}")
        for j, k in enumerate(idx):
            cell = row[k].strip()
            try:
                v = float(cell)
            except ValueError:
                raise SchemaError(f"{path}: row {i}, column {header[k]!r}: not a number: {cell!r}") from None
            if not math.isfinite(v):
                raise SchemaError(f"{path}: row {i}, column {header[k]!r}: missing or non-finite value {cell!r}")
            out[i - 2, j] = v
    return out


def _check_header(path, header):
    if len(set(header)) != len(header):
        raise SchemaError(f"{path}: duplicate column names in header {header}")
    if not header or header[0] != "y":
        raise SchemaError(f"{path}: first column must be 'y', got {header[:1]}")


def read_trial_csv(path) -> TrialDataset:
    path, header, body = _read_rows(path)
    _check_header(path, header)
    if len(header) < 3 or header[1] != "a":
        raise SchemaError(f"{path}: expected header 'y,a,<covariates...>', got {','.join(header)}")
    if not body:
        raise SchemaError(f"{path}: no data rows")
    covs = header[2:]
    vals = _parse_numeric(path, header, body, header)
    a = vals[:, 1]
    bad = np.flatnonzero(~np.isin(a, (0.0, 1.0)))
    if bad.size:
        raise SchemaError(f"{path}: row {bad[0] + 2}, column 'a': treatment must be 0 or 1, got {a[bad[0]]:g}")
    w = np.column_stack([np.ones(len(body)), vals[:, 2:]])
    return TrialDataset(w, a, vals[:, 0], tuple(covs))


def read_historical_csv(path, covariate_names=None) -> HistoricalDataset:
    """Read historical controls; ``covariate_names`` (from the trial file)
    fixes the required names and order."""
    path, header, body = _read_rows(path)
    _check_header(path, header)
    covs = [h for h in header[1:] if h != "a"]
    if covariate_names is not None and list(covs) != list(covariate_names):
        missing = sorted(set(covariate_names) - set(covs))
        extra = sorted(set(covs) - set(covariate_names))
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unexpected {extra}")
        if not detail:
            detail.append(f"order {covs} differs from trial order {list(covariate_names)}")
        raise SchemaError(f"{path}: covariate columns do not match the trial file: {'; '.join(detail)}")
    if not covs:
        raise SchemaError(f"{path}: no covariate columns")
    if not body:
        raise SchemaError(f"{path}: no data rows")
    vals = _parse_numeric(path, header, body, ["y", *covs])
    w = np.column_stack([np.ones(len(body)), vals[:, 1:]])
    return HistoricalDataset(w, vals[:, 0], tuple(covs))


def canonical_float(x: float):
    """Round to 12 significant digits; non-finite values become ``None``."""
    x = float(x)
    if not math.isfinite(x):
        return None
    r = float(f"{x:.12g}")
    return 0.0 if r == 0.0 else r


def canonicalize(obj):
    if isinstance(obj, dict):
        return {str(k): canonicalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonicalize(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return canonical_float(obj)
    if isinstance(obj, np.ndarray):
        return canonicalize(obj.tolist())
    return obj


def dumps_canonical(obj) -> str:
    return json.dumps(canonicalize(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        c = canonical_float(v)
        return "" if c is None else repr(c)
    return str(v)


def write_csv_rows(rows: list, columns: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])
    return buf.getvalue()
