# app/analysis/verdict.py

"""
Constant depth-function criterion for monomial ideals: if A = K[u_1..u_r] is a
direct summand of S and the Rees algebra R(I) is Cohen-Macaulay, then
depth(S/I^k) does not depend on k. The analyzer certifies each hypothesis
separately and compares against the computed depth sequence.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from app.algebra.betti import (
    VIOLATED,
    DepthReport,
    SpreadConsistency,
    depth_function,
    spread_consistency,
)
from app.algebra.monomials import RATIONALS, Field, MonomialIdeal
from app.algebra.semigroup import SummandVerdict
from app.analysis.rees import (
    DEFAULT_WINDOW,
    INCONCLUSIVE,
    CmStatus,
    FiberDimension,
    analytic_spread,
    fiber_dimension_check,
    rees_cm_status,
)
from app.analysis.summand import is_summand
from app.config import ResourceLimits, default_limits
from app.errors import InvariantViolation, ResourceLimitExceeded

logger = logging.getLogger(__name__)

DEFAULT_MAX_POWER = 5


@dataclass(frozen=True)
class Verdict:
    ideal: MonomialIdeal
    summand: SummandVerdict
    rees: CmStatus
    theorem_applies: bool
    empirical: DepthReport
    analytic_spread: Optional[int] = None
    consistency: Optional[SpreadConsistency] = None
    fiber: Optional[FiberDimension] = None
    notes: tuple[str, ...] = field(default=())


def analyze_constant_depth(
    I: MonomialIdeal,
    kmax: int = DEFAULT_MAX_POWER,
    degree_bound: Optional[int] = None,
    window: int = DEFAULT_WINDOW,
    field: Field = RATIONALS,
    limits: Optional[ResourceLimits] = None,
    workers: int = 1,
) -> Verdict:
    limits = limits or default_limits()
    notes = []

    # -------------------------------------------------
    # Summand hypothesis
    # -------------------------------------------------
    summand = is_summand(I, limits)
    if summand.holds is None:
        notes.append(f"summand unknown: {summand.reason}")

    # -------------------------------------------------
    # Cohen-Macaulay hypothesis
    # -------------------------------------------------
    try:
        rees = rees_cm_status(I, degree_bound, window, limits)
    except ResourceLimitExceeded as exc:
        rees = CmStatus(INCONCLUSIVE, reason=str(exc))
    if rees.reason:
        notes.append(f"rees: {rees.reason}")

    # -------------------------------------------------
    # Empirical depth sequence
    # -------------------------------------------------
    empirical = depth_function(I, kmax, field, limits, workers)
    if empirical.truncated:
        notes.append(
            f"depth-function truncated at k = {empirical.truncated_at} ({empirical.truncation_reason})"
        )

    theorem_applies = summand.holds is True and rees.certified_cm
    if theorem_applies and len(empirical.depths) < 2:
        notes.append(
            f"only {len(empirical.depths)} depth value(s) computed; constancy not checked"
        )
    elif theorem_applies and not empirical.constant:
        raise InvariantViolation(
            f"{I}: summand and Cohen-Macaulay Rees algebra certified, "
            f"but depths {list(empirical.depths)} are not constant"
        )

    # -------------------------------------------------
    # Analytic spread bounds
    # -------------------------------------------------
    spread = consistency = None
    fiber = fiber_dimension_check(I)
    if I.is_equigenerated:
        spread = analytic_spread(I)
        consistency = spread_consistency(I.nvars, spread, empirical, rees.certified_cm)
        notes.extend(consistency.notes)
        for name in ("burch", "eisenbud_huneke_equality", "monotone_tail"):
            if getattr(consistency, name) == VIOLATED:
                logger.warning("%s: %s check violated on depths %s", I, name, empirical.depths)
                notes.append(f"{name} violated within k <= {len(empirical.depths)}")
    else:
        notes.append("analytic spread not computed for mixed generator degrees")

    logger.info(
        "analyzed %s: summand=%s rees=%s depths=%s",
        I, summand.status, rees.kind, empirical.depths,
    )
    return Verdict(
        ideal=I,
        summand=summand,
        rees=rees,
        theorem_applies=theorem_applies,
        empirical=empirical,
        analytic_spread=spread,
        consistency=consistency,
        fiber=fiber,
        notes=tuple(notes),
    )
