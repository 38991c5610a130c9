# isetverify/report_store.py
import csv
import json
import logging
from pathlib import Path
from typing import IO, Any, Dict, Iterable, List, Optional, Union

from pydantic import BaseModel

from .config import settings

logger = logging.getLogger(__name__)

# --- File Names ---
SUMMARY_JSON = "summary.json"
SUMMARY_CSV = "summary.csv"
SUMMARY_COLUMNS = ["check", "params", "expect", "verdict", "status", "runtime_seconds", "report_file", "detail"]


def to_document(payload: Union[BaseModel, List[BaseModel]], schema_version: Optional[int] = None) -> Dict[str, Any]:
    """Wraps one report, or a list of them, in the versioned top-level object."""
    version = settings.schema_version if schema_version is None else schema_version
    if isinstance(payload, list):
        return {"schema": version, "reports": [item.model_dump(mode="json") for item in payload]}
    return {"schema": version, **payload.model_dump(mode="json")}


def to_json(payload: Union[BaseModel, List[BaseModel]], schema_version: Optional[int] = None, indent: Optional[int] = 2) -> str:
    return json.dumps(to_document(payload, schema_version), indent=indent, sort_keys=True)


def write_json(stream: IO[str], payload: Union[BaseModel, List[BaseModel]], schema_version: Optional[int] = None) -> None:
    stream.write(to_json(payload, schema_version))
    stream.write("\n")


def report_file_name(label: str, params: Dict[str, Any]) -> str:
    """'size_t' with n=5, delta=2, t=3 becomes 'size_t_delta2_n5_t3.json'."""
    parts = [label] + [f"{key}{params[key]}" for key in sorted(params)]
    return "_".join(str(part) for part in parts) + ".json"


def write_report(directory: Path, name: str, payload: Union[BaseModel, List[BaseModel]], schema_version: Optional[int] = None) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / name
    try:
        with path.open("w", encoding="utf-8") as handle:
            write_json(handle, payload, schema_version)
    except OSError as e:
        logger.error(f"Failed to write report {path}: {e}")
        raise
    logger.debug(f"Wrote {path}")
    return path


def write_summary_csv(directory: Path, rows: Iterable[Dict[str, Any]]) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / SUMMARY_CSV
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=SUMMARY_COLUMNS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({**row, "params": json.dumps(row.get("params", {}), sort_keys=True)})
    logger.info(f"Wrote {path}")
    return path
