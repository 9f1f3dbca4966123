"""CSV/JSON writers and the append-only run manifest."""

from dataclasses import dataclass, field, asdict
from pathlib import Path
import csv
import datetime as _dt
import io
import json
import math

__all__ = ["RunManifest", "format_value", "write_table", "table_to_csv", "output_paths"]


def format_value(x):
    """Text form of a table cell; floats keep 17 significant digits."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    try:
        f = float(x)
    except (TypeError, ValueError):
        return str(x)
    if math.isnan(f):
        return "nan"
    return format(f, ".17g")


def _json_value(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    f = float(x)
    return None if math.isnan(f) else f


def table_to_csv(columns, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def output_paths(output):
    """``(csv_path, json_path)`` for an ``--output`` argument given with or without suffix."""
    p = Path(output)
    stem = p.with_suffix("") if p.suffix in (".csv", ".json") else p
    return stem.with_suffix(".csv"), stem.with_suffix(".json")


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    seed: object = None
    version: str = ""
    outputs: list = field(default_factory=list)
    started_at: str = ""
    wall_clock_s: float = 0.0

    def append_to(self, path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "a") as fh:
            fh.write(json.dumps(asdict(self), sort_keys=True, default=str) + "\n")

    @staticmethod
    def now():
        return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def write_table(output, columns, rows, manifest, extra=None):
    """Write ``rows`` as CSV and JSON next to each other; returns both paths.

    The JSON file holds the same columns and rows, any ``extra`` fields and the manifest.
    """
    csv_path, json_path = output_paths(output)
    csv_path.parent.mkdir(parents=True, exist_ok=True)
    csv_path.write_text(table_to_csv(columns, rows))
    manifest.outputs = [str(csv_path), str(json_path)]
    doc = {
        "columns": list(columns),
        "rows": [[_json_value(v) for v in row] for row in rows],
    }
    if extra:
        doc.update(extra)
    doc["manifest"] = asdict(manifest)
    json_path.write_text(json.dumps(doc, indent=2, default=str) + "\n")
    return csv_path, json_path
