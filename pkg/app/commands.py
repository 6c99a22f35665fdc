# app/commands.py

"""
One entry point shared by the CLI and the HTTP routes: validate the request,
consult the result cache, run the computation, and package a Report.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from app.algebra.betti import betti_table, depth_function, graded_betti_frame
from app.algebra.hilbert import count_quotient, hilbert_numerator, krull_dim
from app.algebra.monomials import Field, Graph, MonomialIdeal, PolyContext
from app.algebra.semigroup import SummandVerdict, algebra_dim, degree_selection, monoid_of
from app.analysis.explore import ExplorationReport, control_ideals, explore_questions
from app.analysis.graphs import analyze_graph
from app.analysis.rees import (
    CmStatus,
    HVectorReport,
    analytic_spread,
    default_degree_bound,
    fiber_dimension_check,
    rees_cm_status,
    rees_hvector,
    rees_normality,
)
from app.analysis.summand import check_retraction, is_summand, retract_check
from app.analysis.verdict import analyze_constant_depth
from app.config import TOOL_VERSION, ResourceLimits
from app.errors import InvalidInputError, ResourceLimitExceeded
from app.normalizers.enums import COMMANDS, IDEAL_COMMANDS
from app.normalizers.ideal_normalizer import parse_ideal
from app.repositories.cache_repo import cache_lookup, cache_store
from app.repositories.hashing import generate_input_hash
from app.schemas.ideal import IdealDocument
from app.schemas.report import Report
from app.schemas.requests import CommandRequest
from app.utils import timed

logger = logging.getLogger(__name__)

DEFAULT_HILBERT_DEGREE = 8
DEFAULT_EXPLORE_DEGREE = 2
HVECTOR_COMMANDS = ("rees-hvector", "rees-cm", "analyze")


@dataclass
class Outcome:
    outputs: dict
    certificates: dict = field(default_factory=dict)
    notes: Sequence[str] = ()
    status: str = "ok"


# =====================================================
# SERIALIZATION HELPERS
# =====================================================

def _vec(v) -> Optional[list[int]]:
    return list(v) if v is not None else None


def summand_dict(v: SummandVerdict) -> dict:
    return {"status": v.status, "method": v.method, "witness": _vec(v.witness), "reason": v.reason}


def hvector_dict(h: HVectorReport) -> dict:
    return {
        "h_vector": list(h.coefficients.coeffs),
        "stable": h.stable,
        "degree_bound": h.degree_bound,
        "window": h.window,
        "negative_index": h.negative_index,
    }


def cm_dict(s: CmStatus) -> dict:
    out = {
        "status": s.kind,
        "negative_index": s.negative_index,
        "reason": s.reason,
        "normal": s.normality.holds if s.normality is not None else None,
        "normality_witness": _vec(s.normality.witness) if s.normality is not None else None,
    }
    if s.hvector is not None:
        out["hvector"] = hvector_dict(s.hvector)
    return out


# =====================================================
# IDEAL COMMANDS
# =====================================================

def _depth_function(I, req, field, limits, workers) -> Outcome:
    report = depth_function(I, req.max_power, field, limits, workers)
    outputs = {
        "kmax": report.kmax,
        "depths": list(report.depths),
        "projdims": list(report.projdims),
        "constant": report.constant,
        "truncated": report.truncated,
        "truncated_at": report.truncated_at,
        "truncation_reason": report.truncation_reason,
    }
    return Outcome(outputs, status="partial" if report.truncated else "ok")


def _betti(I, req, field, limits, workers) -> Outcome:
    table = betti_table(I, field, limits)
    frame = graded_betti_frame(table)
    outputs = {
        "totals": list(table.totals()),
        "projdim": table.projdim,
        "depth": I.nvars - table.projdim,
        "graded": {str(row): [int(x) for x in frame.loc[row]] for row in frame.index},
    }
    certificates = {
        "multigraded": [[i, list(b), value] for (i, b), value in sorted(table.entries.items())]
    }
    return Outcome(outputs, certificates)


def _hilbert(I, req, field, limits, workers) -> Outcome:
    h = hilbert_numerator(I)
    top = req.degree if req.degree is not None else DEFAULT_HILBERT_DEGREE
    outputs = {
        "numerator": list(h.coeffs),
        "numerator_text": str(h),
        "denominator_exponent": I.nvars,
        "dim": krull_dim(I),
        "hilbert_function": [count_quotient(I, d) for d in range(top + 1)],
    }
    return Outcome(outputs)


def _dim(I, req, field, limits, workers) -> Outcome:
    return Outcome({"dim": krull_dim(I)})


def _summand(I, req, field, limits, workers) -> Outcome:
    verdict = is_summand(I, limits)
    certificates = {"hilbert_basis": [list(h) for h in verdict.hilbert_basis]}
    status = "partial" if verdict.holds is None else "ok"
    return Outcome(summand_dict(verdict), certificates, status=status)


def _retract(I, req, field, limits, workers) -> Outcome:
    cert = retract_check(I)
    if cert is None:
        return Outcome({"retract": False, "U": None})
    outputs = {"retract": True, "U": list(cert.U), "retraction_checked": check_retraction(I, cert)}
    certificates = {
        "generators": [list(g) for g in cert.generators],
        "private_variables": list(cert.private_variables),
    }
    return Outcome(outputs, certificates)


def _rees_hvector(I, req, field, limits, workers) -> Outcome:
    report = rees_hvector(I, req.degree_bound, req.window)
    certificates = {"hilbert_function": list(report.hilbert_function)}
    return Outcome(hvector_dict(report), certificates)


def _rees_normal(I, req, field, limits, workers) -> Outcome:
    verdict = rees_normality(I, limits)
    outputs = {"normal": verdict.holds, "witness": _vec(verdict.witness)}
    certificates = {"hilbert_basis": [list(h) for h in verdict.hilbert_basis]}
    return Outcome(outputs, certificates)


def _rees_cm(I, req, field, limits, workers) -> Outcome:
    status = rees_cm_status(I, req.degree_bound, req.window, limits)
    return Outcome(cm_dict(status))


def _spread(I, req, field, limits, workers) -> Outcome:
    fiber = fiber_dimension_check(I)
    outputs = {
        "analytic_spread": analytic_spread(I),
        "algebra_dim": algebra_dim(monoid_of(I)),
        "fiber_dimension_holds": fiber.holds,
    }
    return Outcome(outputs)


def _analyze(I, req, field, limits, workers) -> Outcome:
    verdict = analyze_constant_depth(
        I, req.max_power, req.degree_bound, req.window, field, limits, workers
    )
    consistency = verdict.consistency
    outputs = {
        "summand": summand_dict(verdict.summand),
        "rees": cm_dict(verdict.rees),
        "theorem_applies": verdict.theorem_applies,
        "depths": list(verdict.empirical.depths),
        "constant": verdict.empirical.constant,
        "analytic_spread": verdict.analytic_spread,
        "consistency": {
            "burch": consistency.burch,
            "eisenbud_huneke_equality": consistency.eisenbud_huneke_equality,
            "monotone_tail": consistency.monotone_tail,
        } if consistency is not None else None,
    }
    certificates = {"summand_hilbert_basis": [list(h) for h in verdict.summand.hilbert_basis]}
    if verdict.rees.normality is not None:
        certificates["rees_hilbert_basis"] = [list(h) for h in verdict.rees.normality.hilbert_basis]
    partial = verdict.empirical.truncated or verdict.summand.holds is None
    return Outcome(outputs, certificates, verdict.notes, "partial" if partial else "ok")


IDEAL_HANDLERS: dict[str, Callable[..., Outcome]] = {
    "depth-function": _depth_function,
    "betti": _betti,
    "hilbert": _hilbert,
    "dim": _dim,
    "summand": _summand,
    "retract": _retract,
    "rees-hvector": _rees_hvector,
    "rees-normal": _rees_normal,
    "rees-cm": _rees_cm,
    "spread": _spread,
    "analyze": _analyze,
}


# =====================================================
# OTHER COMMANDS
# =====================================================

def _degree_selection(req: CommandRequest, limits: ResourceLimits) -> Outcome:
    if not req.blocks or not req.subgroup:
        raise InvalidInputError("degree-selection needs blocks and subgroup generators")
    n = sum(len(b) for b in req.blocks)
    if req.vars is not None and req.vars != n:
        raise InvalidInputError(f"blocks cover {n} variables but --vars is {req.vars}")
    field = Field.parse(req.field or "rational")
    I = degree_selection(req.blocks, req.subgroup, PolyContext(n, field), limits)
    doc = IdealDocument.from_ideal(I)
    return Outcome({"ideal": doc.model_dump(), "generators": str(I)})


def _explore(req: CommandRequest, limits: ResourceLimits, workers: int) -> Outcome:
    field = Field.parse(req.field or "rational")
    degree = req.degree if req.degree is not None else DEFAULT_EXPLORE_DEGREE
    controls = control_ideals() if req.include_controls else ()
    notes: list[str] = []
    try:
        report = explore_questions(
            req.nmax, req.rmax, degree, req.budget,
            kmax=req.max_power, field=field, limits=limits, controls=controls, workers=workers,
        )
    except ResourceLimitExceeded as exc:
        if not isinstance(exc.partial, ExplorationReport):
            raise
        report = exc.partial
        notes.append(f"{exc}; {len(report.records)} of {report.enumerated} ideals analyzed")

    def record(r) -> dict:
        return {
            "name": r.name, "ideal": r.ideal, "stratum": r.stratum, "summand": r.summand,
            "rees": r.rees, "depths": list(r.depths), "q1": r.q1_candidate, "q2": r.q2_candidate,
            "violation": r.violation, "certificates": r.certificates,
        }

    summary = report.summary()
    outputs = {
        "enumerated": report.enumerated,
        "analyzed": len(report.records),
        "exhausted": report.exhausted,
        "candidates": len(report.candidates),
        "violations": len(report.violations),
        "unresolved": sum(1 for r in report.records if r.unresolved),
        "summary": {str(k): {c: int(v) for c, v in row.items()} for k, row in summary.to_dict(orient="index").items()},
    }
    certificates = {
        "candidates": [record(r) for r in report.candidates],
        "violations": [record(r) for r in report.violations],
    }
    if report.violations:
        status = "violation"
    elif report.exhausted or notes:
        status = "partial"
    else:
        status = "ok"
    return Outcome(outputs, certificates, notes, status)


def _graph(req: CommandRequest, limits: ResourceLimits) -> Outcome:
    if req.vars is None or req.edges is None:
        raise InvalidInputError("graph needs --vars and --edges")
    G = Graph(req.vars, tuple(tuple(e) for e in req.edges))
    field = Field.parse(req.field or "rational")
    report = analyze_graph(G, req.max_power, field, limits)
    outputs = {
        "components": [
            {
                "vertices": list(c.vertices),
                "summand": c.summand.status,
                "algebra_normal": c.algebra_normal,
                "rees_normal": c.rees_normal,
                "chain_holds": c.chain_holds,
            }
            for c in report.components
        ],
        "consistent": report.consistent,
        "summand": summand_dict(report.verdict.summand),
        "rees": cm_dict(report.verdict.rees),
        "depths": list(report.verdict.empirical.depths),
        "theorem_applies": report.verdict.theorem_applies,
    }
    return Outcome(outputs, notes=report.notes + report.verdict.notes)


# =====================================================
# ENTRY POINT
# =====================================================

def load_ideal(req: CommandRequest) -> MonomialIdeal:
    if req.ideal is not None:
        doc = req.ideal
    elif req.text is not None:
        doc = parse_ideal(req.text)
    else:
        raise InvalidInputError("an ideal is required (structured document or file text)")
    if req.field:
        doc = doc.model_copy(update={"field": str(Field.parse(req.field))})
    return doc.to_ideal()


def canonical_inputs(command: str, req: CommandRequest, I: Optional[MonomialIdeal]) -> dict:
    params = req.model_dump(exclude={"ideal", "text", "field"}, exclude_none=True)
    inputs: dict = {"parameters": params}
    if I is not None:
        inputs["ideal"] = {"nvars": I.nvars, "gens": [list(g) for g in I.gens], "text": str(I)}
        inputs["field"] = str(I.context.field)
    else:
        inputs["field"] = str(Field.parse(req.field or "rational"))
    return inputs


def run_command(
    command: str,
    req: CommandRequest,
    limits: ResourceLimits,
    cache_dir: Optional[str] = None,
    workers: int = 1,
) -> Report:
    if command not in COMMANDS:
        raise InvalidInputError(f"unknown command {command!r}")

    I = load_ideal(req) if command in IDEAL_COMMANDS else None
    if I is not None and command in HVECTOR_COMMANDS and req.degree_bound is None:
        req = req.model_copy(update={"degree_bound": default_degree_bound(I.nvars)})
    inputs = canonical_inputs(command, req, I)
    key = generate_input_hash(command, inputs)

    cached = cache_lookup(cache_dir, key)
    if cached is not None:
        logger.info("%s served from cache", command)
        return cached

    timing: dict[str, float] = {}
    try:
        with timed(timing, "seconds"):
            if I is not None:
                outcome = IDEAL_HANDLERS[command](I, req, I.context.field, limits, workers)
            elif command == "degree-selection":
                outcome = _degree_selection(req, limits)
            elif command == "explore":
                outcome = _explore(req, limits, workers)
            else:
                outcome = _graph(req, limits)
    except ResourceLimitExceeded as exc:
        logger.warning("%s stopped by a resource ceiling: %s", command, exc)
        outcome = Outcome({}, notes=[str(exc)], status="partial")

    report = Report(
        command=command,
        inputs=inputs,
        outputs=outcome.outputs,
        certificates=outcome.certificates,
        timing=timing,
        tool_version=TOOL_VERSION,
        field=inputs["field"],
        status=outcome.status,
        notes=outcome.notes,
    )
    if report.status == "ok":
        cache_store(cache_dir, key, report)
    return report
