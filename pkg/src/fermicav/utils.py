import csv
import logging
import math
import os
from importlib import metadata
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import config
from .opio import dumps

logger = logging.getLogger(__name__)


def package_version() -> str:
    try:
        return metadata.version("pyfermicav")
    except metadata.PackageNotFoundError:
        return "unknown"


def format_number(value: Any, digits: Optional[int] = None) -> str:
    """CSV text of a cell, floats with `digits` significant digits"""
    if digits is None:
        digits = config["significant_digits"]
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        return "%.*g" % (digits, value)
    return str(value)


def _ensure_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def write_csv(
        path: str,
        columns: Sequence[str],
        rows: List[Sequence[Any]],
        digits: Optional[int] = None,
) -> None:
    try:
        _ensure_parent(path)
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([format_number(x, digits) for x in row])
    except OSError as e:
        raise OSError("Cannot write %s: %s" % (path, e)) from e
    logger.info("Wrote %d rows to %s" % (len(rows), path))


def metadata_path(path: str) -> str:
    root, _ = os.path.splitext(path)
    return root + ".meta.json"


def write_metadata(path: str, metadata: Dict[str, Any]) -> None:
    try:
        _ensure_parent(path)
        with open(path, "w") as f:
            f.write(dumps(metadata))
            f.write("\n")
    except OSError as e:
        raise OSError("Cannot write %s: %s" % (path, e)) from e


def parse_grid(text: str) -> List[int]:
    """"NxM" or "N" to [N, M]"""
    parts = text.lower().split("x")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2:
        raise ValueError("Grid must look like NxM, got %s" % text)
    return [int(p) for p in parts]


def fit_power_law(xs: Sequence[float], ys: Sequence[float]
                  ) -> Tuple[float, float]:
    """Least squares fit of log y = p log x + c, returns (p, c)"""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValueError("Power law fits need positive data")
    p, c = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(p), float(c)
