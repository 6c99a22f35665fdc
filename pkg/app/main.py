# app/main.py

import logging

from fastapi import FastAPI, HTTPException, Response

from app.commands import run_command
from app.config import TOOL_VERSION, get_settings
from app.errors import (
    InvalidInputError,
    InvariantViolation,
    MonodepthError,
)
from app.normalizers.enums import COMMANDS
from app.schemas.report import Report
from app.schemas.requests import CommandRequest

logger = logging.getLogger(__name__)

app = FastAPI(
    title="Monomial Ideal Depth Analyzer",
    version=TOOL_VERSION,
)


# --------------------------------------------------
# BASIC ROUTES
# --------------------------------------------------
@app.get("/")
def root():
    return {"status": "running", "commands": list(COMMANDS)}


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/favicon.ico", include_in_schema=False)
def favicon():
    """Silence browser favicon requests"""
    return Response(status_code=204)


# --------------------------------------------------
# COMMANDS (same reports as `--format json`)
# --------------------------------------------------
@app.post("/{command}", response_model=Report)
def run(command: str, request: CommandRequest, response: Response):
    """
    Run one analyzer command. A resource ceiling gives a partial report with
    status 503; an internal invariant violation gives 500.
    """

    if command not in COMMANDS:
        raise HTTPException(status_code=404, detail=f"unknown command {command!r}")

    settings = get_settings()
    try:
        report = run_command(command, request, settings.limits, settings.cache_dir, settings.workers)

    except InvariantViolation as e:
        logger.error("invariant violation in %s: %s", command, e)
        raise HTTPException(status_code=500, detail=str(e))

    except InvalidInputError as e:
        raise HTTPException(status_code=400, detail=str(e))

    except MonodepthError as e:
        raise HTTPException(status_code=422, detail=str(e))

    if report.status == "partial":
        response.status_code = 503
    elif report.status == "violation":
        response.status_code = 500
    return report
