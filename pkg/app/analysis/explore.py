# app/analysis/explore.py

"""
Sweep over small square-free monomial ideals, recording for each the summand
verdict, the Rees Cohen-Macaulay status and the computed depth sequence.

Two open implications are watched:
    q1:  summand  =>  R(I) Cohen-Macaulay
    q2:  constant depth-function  =>  summand and R(I) Cohen-Macaulay
Hits are reported as candidates with their certificates and are never claimed.
A summand ideal with certified Cohen-Macaulay Rees algebra and non-constant
depths would contradict the constant-depth criterion and is recorded as a
violation.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

import pandas as pd

from app.algebra.monomials import (
    RATIONALS,
    Field,
    MonomialIdeal,
    PolyContext,
    canonical_form_under_permutation,
    divides,
    minimalize,
)
from app.analysis.rees import CERTIFIED_CM, CERTIFIED_NOT_CM, INCONCLUSIVE
from app.analysis.verdict import analyze_constant_depth
from app.config import ResourceLimits, default_limits
from app.errors import InvariantViolation, ResourceLimitExceeded

logger = logging.getLogger(__name__)

DEFAULT_EXPLORE_POWER = 4


@dataclass(frozen=True)
class InstanceRecord:
    name: str
    ideal: str
    nvars: int
    ngens: int
    stratum: str
    control: bool
    summand: str
    rees: str
    depths: tuple[int, ...]
    constant: bool
    q1_candidate: bool = False
    q2_candidate: bool = False
    unresolved: bool = False
    violation: Optional[str] = None
    certificates: dict = field(default_factory=dict, compare=False, hash=False)


@dataclass
class ExplorationReport:
    nmax: int
    rmax: int
    degree: int
    kmax: int
    budget: Optional[int]
    enumerated: int = 0
    exhausted: bool = False
    records: list[InstanceRecord] = field(default_factory=list)

    @property
    def candidates(self) -> list[InstanceRecord]:
        return [r for r in self.records if r.q1_candidate or r.q2_candidate]

    @property
    def violations(self) -> list[InstanceRecord]:
        return [r for r in self.records if r.violation]

    def summary(self) -> pd.DataFrame:
        columns = [
            "instances", "summand", "cm_certified", "not_cm", "constant",
            "q1_candidates", "q2_candidates", "unresolved", "violations",
        ]
        if not self.records:
            return pd.DataFrame(columns=columns)
        frame = pd.DataFrame(
            {
                "stratum": [r.stratum for r in self.records],
                "instances": 1,
                "summand": [r.summand == "true" for r in self.records],
                "cm_certified": [r.rees == CERTIFIED_CM for r in self.records],
                "not_cm": [r.rees == CERTIFIED_NOT_CM for r in self.records],
                "constant": [r.constant for r in self.records],
                "q1_candidates": [r.q1_candidate for r in self.records],
                "q2_candidates": [r.q2_candidate for r in self.records],
                "unresolved": [r.unresolved for r in self.records],
                "violations": [r.violation is not None for r in self.records],
            }
        )
        return frame.groupby("stratum")[columns].sum().astype(int)


# =====================================================
# ENUMERATION
# =====================================================

def squarefree_ideals(nmax: int, rmax: int, degree: int) -> Iterable[MonomialIdeal]:
    """
    Square-free ideals with all n variables in their support, 1 <= n <= nmax,
    1 <= r <= rmax minimal generators of degree <= `degree`, one per orbit
    under permuting the variables.
    """
    for n in range(1, nmax + 1):
        ctx = PolyContext(n)
        monomials = []
        for size in range(1, min(degree, n) + 1):
            for support in combinations(range(n), size):
                monomials.append(tuple(1 if j in support else 0 for j in range(n)))
        seen = set()
        for r in range(1, rmax + 1):
            for gens in combinations(monomials, r):
                if any(divides(a, b) for a in gens for b in gens if a != b):
                    continue
                if any(all(g[j] == 0 for g in gens) for j in range(n)):
                    continue
                canonical = canonical_form_under_permutation(minimalize(gens, ctx))
                if canonical.gens in seen:
                    continue
                seen.add(canonical.gens)
                yield canonical


def stratum_of(I: MonomialIdeal) -> str:
    return f"deg {I.degrees[0]}" if I.is_equigenerated else "mixed"


# =====================================================
# PER-INSTANCE CLASSIFICATION
# =====================================================

def classify(args) -> InstanceRecord:
    name, I, kmax, field, limits, control = args
    stratum = "control" if control else stratum_of(I)
    try:
        verdict = analyze_constant_depth(I, kmax, field=field, limits=limits)
    except InvariantViolation as exc:
        logger.error("constant-depth criterion contradicted by %s: %s", I, exc)
        return InstanceRecord(
            name, str(I), I.nvars, len(I.gens), stratum, control,
            summand="unknown", rees="unknown", depths=(), constant=False,
            violation=str(exc),
        )

    summand, rees = verdict.summand, verdict.rees
    depths = verdict.empirical.depths
    short = verdict.empirical.truncated and len(depths) < 2
    constant = verdict.empirical.constant and not short

    q1 = summand.holds is True and rees.kind == CERTIFIED_NOT_CM
    q2 = constant and (summand.holds is False or rees.kind == CERTIFIED_NOT_CM)
    unresolved = (summand.holds is None or rees.kind == INCONCLUSIVE or short) and not (q1 or q2)

    certificates = {"summand_method": summand.method}
    if summand.witness is not None:
        certificates["summand_witness"] = list(summand.witness)
    if rees.negative_index is not None:
        certificates["negative_h_index"] = rees.negative_index
        certificates["h_vector"] = list(rees.hvector.coefficients.coeffs)
    if rees.normality is not None and rees.normality.witness is not None:
        certificates["normality_witness"] = list(rees.normality.witness)

    return InstanceRecord(
        name=name,
        ideal=str(I),
        nvars=I.nvars,
        ngens=len(I.gens),
        stratum=stratum,
        control=control,
        summand=summand.status,
        rees=rees.kind,
        depths=depths,
        constant=constant,
        q1_candidate=q1,
        q2_candidate=q2,
        unresolved=unresolved,
        certificates=certificates,
    )


def explore_questions(
    nmax: int,
    rmax: int,
    degree: int,
    budget: Optional[int] = None,
    kmax: int = DEFAULT_EXPLORE_POWER,
    field: Field = RATIONALS,
    limits: Optional[ResourceLimits] = None,
    controls: Iterable[tuple[str, MonomialIdeal]] = (),
    workers: int = 1,
) -> ExplorationReport:
    limits = limits or default_limits()
    report = ExplorationReport(nmax, rmax, degree, kmax, budget)

    jobs = []
    for I in squarefree_ideals(nmax, rmax, degree):
        report.enumerated += 1
        if budget is not None and len(jobs) >= budget:
            report.exhausted = True
            continue
        jobs.append((f"#{len(jobs) + 1}", I, kmax, field, limits, False))
    for name, I in controls:
        jobs.append((name, I, kmax, field, limits, True))

    if report.exhausted:
        logger.warning(
            "exploration budget %d exhausted: %d of %d ideals analyzed",
            budget, budget, report.enumerated,
        )

    try:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for record in pool.map(classify, jobs):
                    report.records.append(record)
        else:
            for job in jobs:
                report.records.append(classify(job))
    except ResourceLimitExceeded as exc:
        exc.partial = report
        raise

    logger.info(
        "explored %d ideals: %d candidates, %d violations",
        len(report.records), len(report.candidates), len(report.violations),
    )
    return report


def control_ideals() -> list[tuple[str, MonomialIdeal]]:
    """
    Non-square-free ideal that is a summand (even a retract) with constant depth
    3 and a Rees algebra whose h-vector (1,2,3,4,3,1,-1) rules out
    Cohen-Macaulayness.
    """
    ctx = PolyContext(6)
    ex_no = minimalize([(1, 0, 0, 3, 0, 0), (0, 1, 0, 0, 3, 0), (0, 0, 1, 1, 1, 1)], ctx)
    return [("ex-no", ex_no)]
