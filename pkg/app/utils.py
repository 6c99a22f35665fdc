# app/utils.py

import json
import time
from contextlib import contextmanager
from typing import Any, Iterator


def flatten(data: Any, prefix: str = "") -> dict[str, str]:
    """
    Nested dicts become dotted keys; lists and scalars are rendered as compact
    JSON so the text and JSON forms of a report carry the same values.
    """
    out: dict[str, str] = {}
    if isinstance(data, dict) and data:
        for key, value in data.items():
            out.update(flatten(value, f"{prefix}.{key}" if prefix else str(key)))
    else:
        out[prefix] = json.dumps(data, sort_keys=True, default=str)
    return out


@contextmanager
def timed(timing: dict, name: str) -> Iterator[None]:
    start = time.perf_counter()
    try:
        yield
    finally:
        timing[name] = round(time.perf_counter() - start, 6)
