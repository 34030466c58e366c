"""Dataset serialization: CSV rows, the manifest, and the final archive.

Everything here is bit-stable: cell formatting is fixed, JSON is emitted
in one canonical form, rows are fully ordered, and archive members carry
constant timestamps and attributes so equal inputs give equal bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import zipfile
from datetime import datetime, timezone
from pathlib import Path

from cam import __version__
from cam.metrics.schema import HEADER, column_hashes

SCHEMA_VERSION = 1
_EPOCH_TIME = "1970-01-01T00:00:00Z"
_ZIP_DATE = (1980, 1, 1, 0, 0, 0)
_ZIP_COMPRESSLEVEL = 6


def format_value(value) -> str:
    """One dataset cell: ints verbatim, NaN floats empty, floats repr."""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return repr(value)
    raise TypeError(f"unsupported cell type: {type(value).__name__}")


def order_rows(rows: list[dict]) -> list[dict]:
    return sorted(rows, key=lambda r: (r["repo"], r["path"], r["class_name"]))


def rows_to_csv_bytes(rows: list[dict]) -> bytes:
    """Serialize rows (already formatted or raw) in schema column order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for row in order_rows(rows):
        writer.writerow([format_value(row[name]) for name in HEADER])
    return buf.getvalue().encode("utf-8")


def read_csv_rows(path: str | Path) -> list[dict]:
    """Read a dataset CSV back as string-valued rows."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if tuple(header) != HEADER:
            raise ValueError(f"unexpected header in {path}")
        return [dict(zip(header, row)) for row in reader]


def write_bytes_atomic(path: str | Path, data: bytes) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def canonical_json(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def write_json_atomic(path: str | Path, obj) -> None:
    write_bytes_atomic(path, canonical_json(obj) + b"\n")


def generated_at(reproducible: bool, specs) -> str:
    """Manifest timestamp: pin-derived when reproducible, else wall clock."""
    if reproducible:
        stamps = [spec.discovered_at for spec in specs]
        return max(stamps) if stamps else _EPOCH_TIME
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def build_manifest(
    criteria_dict: dict,
    repo_entries: list[dict],
    global_filter_stats: dict,
    discovery_info: dict,
    reproducible: bool,
    stamp: str,
) -> dict:
    parse_rejects = global_filter_stats["rejected"]["unparseable"]
    return {
        "schema_version": SCHEMA_VERSION,
        "generated_at": stamp,
        "tool": {"name": "cam", "version": __version__},
        "reproducible": reproducible,
        "criteria": criteria_dict,
        "metric_schema": column_hashes(),
        "repos": sorted(repo_entries, key=lambda e: e["full_name"]),
        "filter_stats": global_filter_stats,
        "parse_rejects": parse_rejects,
        "discovery": discovery_info,
    }


def pack_archive(zip_path: str | Path, members: dict[str, bytes]) -> None:
    """Write the deliverable archive with fully pinned member metadata."""
    zip_path = Path(zip_path)
    zip_path.parent.mkdir(parents=True, exist_ok=True)
    tmp = zip_path.with_name(zip_path.name + ".tmp")
    with zipfile.ZipFile(tmp, "w") as archive:
        for arcname in sorted(members):
            info = zipfile.ZipInfo(arcname, date_time=_ZIP_DATE)
            info.external_attr = 0o644 << 16
            info.create_system = 3
            info.compress_type = zipfile.ZIP_DEFLATED
            archive.writestr(
                info,
                members[arcname],
                compress_type=zipfile.ZIP_DEFLATED,
                compresslevel=_ZIP_COMPRESSLEVEL,
            )
    os.replace(tmp, zip_path)
