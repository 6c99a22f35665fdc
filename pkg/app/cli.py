# app/cli.py

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from app.config import ResourceLimits, get_settings
from app.commands import run_command
from app.errors import InvariantViolation, MonodepthError
from app.normalizers.arguments import parse_blocks, parse_edges, parse_vectors
from app.normalizers.enums import (
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    IDEAL_COMMANDS,
    OUTPUT_FORMATS,
)
from app.schemas.report import Report
from app.schemas.requests import CommandRequest
from app.utils import flatten

logger = logging.getLogger(__name__)

STATUS_EXIT = {"ok": EXIT_OK, "partial": EXIT_RESOURCE, "violation": EXIT_INVARIANT}


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors here are exit 1."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common(p: argparse.ArgumentParser):
    p.add_argument("--max-power", type=int, default=5, help="largest k for depth(S/I^k)")
    p.add_argument("--degree-bound", type=int, help="D for the Rees h-vector (default max(4(n+1), 20))")
    p.add_argument("--window", type=int, default=4, help="trailing zeros needed to call an h-vector stable")
    p.add_argument("--field", help="rational | fp:<p>")
    p.add_argument("--format", choices=OUTPUT_FORMATS, default="text")
    p.add_argument("--cache-dir", help="result cache directory (default $MONODEPTH_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--workers", type=int, help="processes for independent computations")
    p.add_argument("--limit-closure", type=int)
    p.add_argument("--limit-hilbert-basis", type=int)
    p.add_argument("--limit-cone", type=int)
    p.add_argument("--limit-kmax", type=int)
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="monodepth", description="Depth functions of monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    for name in IDEAL_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("ideal", help="ideal file (symbolic or JSON), '-' for stdin")
        if name == "hilbert":
            p.add_argument("--degree", type=int, help="list the Hilbert function up to this degree")
        _common(p)

    p = sub.add_parser("degree-selection")
    p.add_argument("--blocks", required=True, help="block count s, or explicit blocks '1,2;3'")
    p.add_argument("--subgroup", required=True, help="generators of H, e.g. '2' or '1,1;0,2'")
    p.add_argument("--vars", type=int, required=True)
    _common(p)

    p = sub.add_parser("explore")
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--rmax", type=int, default=2)
    p.add_argument("--degree", type=int, default=2, help="largest generator degree")
    p.add_argument("--budget", type=int, help="stop after this many ideals")
    p.add_argument("--include-controls", action="store_true")
    _common(p)

    p = sub.add_parser("graph")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--edges", required=True, help="edges like '1-2,2-3'")
    _common(p)

    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def build_request(args: argparse.Namespace) -> CommandRequest:
    fields = {
        "field": args.field,
        "max_power": args.max_power,
        "degree_bound": args.degree_bound,
        "window": args.window,
    }
    if args.command in IDEAL_COMMANDS:
        fields["text"] = _read(args.ideal)
        fields["degree"] = getattr(args, "degree", None)
    elif args.command == "degree-selection":
        fields["vars"] = args.vars
        fields["blocks"] = parse_blocks(args.blocks, args.vars)
        fields["subgroup"] = parse_vectors(args.subgroup)
    elif args.command == "explore":
        fields.update(
            nmax=args.nmax, rmax=args.rmax, degree=args.degree,
            budget=args.budget, include_controls=args.include_controls,
        )
    else:
        fields["vars"] = args.vars
        fields["edges"] = parse_edges(args.edges)
    return CommandRequest(**fields)


def build_limits(args: argparse.Namespace, base: ResourceLimits) -> ResourceLimits:
    overrides = {
        "closure": args.limit_closure,
        "hilbert_basis": args.limit_hilbert_basis,
        "cone": args.limit_cone,
        "kmax": args.limit_kmax,
    }
    values = base.model_dump()
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ResourceLimits(**values)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return report.model_dump_json(indent=2)
    return "\n".join(f"{key}: {value}" for key, value in flatten(report.model_dump()).items())


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        limits = build_limits(args, settings.limits)
        request = build_request(args)
        cache_dir = None if args.no_cache else (args.cache_dir or settings.cache_dir)
        workers = args.workers or settings.workers
        report = run_command(args.command, request, limits, cache_dir, workers)
    except InvariantViolation as exc:
        logger.error("internal invariant violated: %s", exc)
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (MonodepthError, ValidationError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    print(render(report, args.format))
    return STATUS_EXIT[report.status]
