# app/repositories/hashing.py

import hashlib
import json


def generate_input_hash(command: str, inputs: dict) -> str:
    """
    Stable SHA-256 over a command and its canonical inputs (canonical ideal,
    field, heuristic parameters). Used as the result-cache key.
    """
    normalized = json.dumps({"command": command, "inputs": inputs}, sort_keys=True, default=str)
    return hashlib.sha256(normalized.encode("utf-8")).hexdigest()
