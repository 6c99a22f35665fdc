# app/repositories/cache_repo.py

"""
Content-addressed result cache: one JSON file per input hash. Writes go to a
temporary file in the same directory and are renamed into place, so concurrent
processes never observe a half-written entry.
"""

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from app.config import TOOL_VERSION
from app.schemas.report import Report

logger = logging.getLogger(__name__)


def _entry_path(cache_dir: str, key: str) -> Path:
    return Path(cache_dir) / f"{key}.json"


def cache_lookup(cache_dir: Optional[str], key: str) -> Optional[Report]:
    if not cache_dir:
        return None
    path = _entry_path(cache_dir, key)
    if not path.exists():
        return None

    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
        report = Report.model_validate(payload)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        logger.warning("ignoring corrupt cache entry %s: %s", path.name, exc)
        return None

    if report.tool_version != TOOL_VERSION:
        logger.info("cache entry %s from version %s, recomputing", path.name, report.tool_version)
        return None
    return report.model_copy(update={"cached": True})


def cache_store(cache_dir: Optional[str], key: str, report: Report) -> None:
    if not cache_dir:
        return
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)

    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{key[:12]}-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(report.model_dump_json(indent=2))
        os.replace(tmp, _entry_path(cache_dir, key))
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise
    logger.debug("cached %s report under %s", report.command, key[:12])
