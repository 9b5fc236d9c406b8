"""CSV readers for the inversion CLI artifacts, with schema diagnostics.

Documented schemas:
  marginal CSVs:  bin_center,density
  data CSVs:      x1,x2,u1,u2,u3
  chain CSVs:     step,a,b,d,log10C,logdensity
"""
import csv
import json
from pathlib import Path

import numpy as np

MARGINAL_COLUMNS = ("bin_center", "density")
DATA_COLUMNS = ("x1", "x2", "u1", "u2", "u3")


class SchemaError(ValueError):
    """Input CSV does not match the documented schema; message lists columns."""


def _read_columns(path, expected):
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"{path}: file does not exist")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected columns "
                              f"{','.join(expected)}") from None
        if tuple(header) != tuple(expected):
            raise SchemaError(
                f"{path}: expected columns {','.join(expected)}, "
                f"found {','.join(header)}")
        rows = []
        for i, row in enumerate(reader, start=2):
            if len(row) != len(expected):
                raise SchemaError(f"{path}: line {i} has {len(row)} fields, "
                                  f"expected {len(expected)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise SchemaError(f"{path}: line {i}: {exc}") from None
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return np.array(rows)


def read_marginal(path):
    """(bin_centers, densities) from a marginal CSV."""
    arr = _read_columns(path, MARGINAL_COLUMNS)
    return arr[:, 0], arr[:, 1]


def read_data(path):
    """(points (M,2), displacements (M,3)) from a station data CSV."""
    arr = _read_columns(path, DATA_COLUMNS)
    return arr[:, :2], arr[:, 2:]


def read_true_model(in_dir):
    """True (a, b, d) from a manifest.json in the run directory, if present."""
    path = Path(in_dir) / "manifest.json"
    if not path.exists():
        return None
    try:
        man = json.loads(path.read_text())
        m = man["config"]["scenario"]["m_true"]
        return float(m[0]), float(m[1]), float(m[2])
    except (json.JSONDecodeError, KeyError, IndexError, TypeError, ValueError):
        return None
