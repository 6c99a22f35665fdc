# app/schemas/requests.py

from typing import List, Optional

from pydantic import BaseModel, Field

from app.schemas.ideal import IdealDocument


class CommandRequest(BaseModel):
    """
    Body of POST /<command>. Ideal-based commands need `ideal` (structured) or
    `text` (symbolic or JSON file contents); the rest of the fields mirror the
    CLI flags.
    """

    ideal: Optional[IdealDocument] = None
    text: Optional[str] = None
    field: Optional[str] = None

    max_power: int = Field(5, ge=1)
    degree_bound: Optional[int] = Field(None, ge=1)
    window: int = Field(4, ge=1)
    degree: Optional[int] = Field(None, ge=0)

    blocks: Optional[List[List[int]]] = None
    subgroup: Optional[List[List[int]]] = None
    vars: Optional[int] = Field(None, ge=1)
    edges: Optional[List[List[int]]] = None

    nmax: int = Field(3, ge=0)
    rmax: int = Field(2, ge=0)
    budget: Optional[int] = Field(None, ge=0)
    include_controls: bool = False
