# app/schemas/report.py

from typing import Any, Dict, List, Literal

from pydantic import BaseModel, Field


class Report(BaseModel):
    """
    What every command produces, on the CLI (text or --format json) and over
    HTTP. Certificates are plain data so they can be re-checked offline.
    """

    command: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any] = Field(default_factory=dict)
    certificates: Dict[str, Any] = Field(default_factory=dict)
    timing: Dict[str, float] = Field(default_factory=dict)
    tool_version: str
    field: str = "rational"
    cached: bool = False
    status: Literal["ok", "partial", "violation"] = "ok"
    notes: List[str] = Field(default_factory=list)
