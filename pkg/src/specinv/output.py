"""Deterministic CSV/JSON emission with atomic file replacement."""

import csv
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np


def format_float(x):
    """17 significant digits; NaN becomes an empty field."""
    x = float(x)
    if math.isnan(x):
        return ""
    return format(x, ".17g")


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def csv_text(columns):
    """Render ``{name: sequence}`` as header + rows, LF line endings."""
    names = list(columns)
    cols = [np.asarray(columns[k]) if not isinstance(columns[k], list) else columns[k] for k in names]
    n = len(cols[0]) if cols else 0
    if any(len(c) != n for c in cols):
        raise ValueError("columns differ in length")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for i in range(n):
        writer.writerow([_cell(c[i]) for c in cols])
    return buf.getvalue()


def _parse_cell(cell):
    if cell == "":
        return None
    try:
        return float(cell)
    except ValueError:
        return cell


def read_csv(text):
    """Parse CSV text back into ``{name: list}``; numbers become floats,
    empty fields ``None``, anything else stays a string."""
    reader = csv.reader(io.StringIO(text))
    names = next(reader)
    data = {k: [] for k in names}
    for row in reader:
        for k, cell in zip(names, row):
            data[k].append(_parse_cell(cell))
    return data


def recsv(text):
    """Parse and re-emit CSV text; the output must equal the input."""
    data = read_csv(text)
    cols = {k: [math.nan if x is None else x for x in v] for k, v in data.items()}
    return csv_text(cols)


def _json_value(x):
    x = float(x)
    return None if math.isnan(x) else x


def json_text(columns, metadata):
    payload = {
        "metadata": metadata,
        "columns": {k: [_json_value(x) for x in np.asarray(v, dtype=float)] for k, v in columns.items()},
    }
    return json.dumps(payload, indent=1, sort_keys=False) + "\n"


def write_text(text, path=None):
    """Write to ``path`` atomically (temp file + rename), or to stdout."""
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
