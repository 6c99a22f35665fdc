import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

TOOL_VERSION = "1.0.0"


class ResourceLimits(BaseModel):
    closure: int = Field(200_000, ge=1)
    hilbert_basis: int = Field(20_000, ge=1)
    cone: int = Field(100_000, ge=1)
    kmax: int = Field(30, ge=1)

    model_config = {"frozen": True}


@dataclass(frozen=True)
class Settings:
    cache_dir: Optional[str]
    limits: ResourceLimits
    workers: int
    log_level: str


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    return int(raw) if raw not in (None, "") else default


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    limits = ResourceLimits(
        closure=_env_int("MONODEPTH_LIMIT_CLOSURE", 200_000),
        hilbert_basis=_env_int("MONODEPTH_LIMIT_HILBERT_BASIS", 20_000),
        cone=_env_int("MONODEPTH_LIMIT_CONE", 100_000),
        kmax=_env_int("MONODEPTH_LIMIT_KMAX", 30),
    )

    return Settings(
        cache_dir=os.getenv("MONODEPTH_CACHE_DIR") or None,
        limits=limits,
        workers=max(1, _env_int("MONODEPTH_WORKERS", 1)),
        log_level=os.getenv("MONODEPTH_LOG_LEVEL", "WARNING").upper(),
    )


def default_limits() -> ResourceLimits:
    return get_settings().limits
