# app/algebra/betti.py

"""
Multigraded Betti numbers of S/I through upper Koszul complexes:
beta_{i+1,b}(S/I) = dim H̃_{i-1}(K^b(I)) for b in the lcm-closure of the generators.
Depth comes from Auslander-Buchsbaum, depth(S/I) = n - projdim(S/I).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Optional

import pandas as pd

from app.algebra.homology import SimplicialComplex, reduced_homology_dims
from app.algebra.monomials import (
    RATIONALS,
    Exponents,
    Field,
    MonomialIdeal,
    divides,
    power,
)
from app.config import ResourceLimits, default_limits
from app.errors import (
    InvalidInputError,
    InvariantViolation,
    ResourceLimitExceeded,
    UnitIdealError,
    ZeroIdealError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    nvars: int
    field: Field
    entries: Mapping[tuple[int, Exponents], int]

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> tuple[int, ...]:
        out = [0] * (self.projdim + 1)
        for (i, _), value in self.entries.items():
            out[i] += value
        return tuple(out)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, b), value in self.entries.items():
            key = (i, sum(b))
            out[key] = out.get(key, 0) + value
        return out

    def __hash__(self):
        return hash((self.nvars, self.field, tuple(sorted(self.entries.items()))))


# =====================================================
# CANDIDATE MULTIDEGREES
# =====================================================

def lcm_closure(I: MonomialIdeal, limit: Optional[int] = None) -> list[Exponents]:
    if I.is_zero:
        raise ZeroIdealError("the lcm-closure of the zero ideal is empty")
    limit = limit or default_limits().closure

    gens = I.gens
    closure = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = tuple(a if a >= c else c for a, c in zip(x, g))
                if y not in closure:
                    closure.add(y)
                    fresh.append(y)
                    if len(closure) > limit:
                        raise ResourceLimitExceeded("closure", limit)
        frontier = fresh

    logger.debug("lcm closure of %d generators has %d elements", len(gens), len(closure))
    return sorted(closure)


def upper_koszul(I: MonomialIdeal, b: Exponents) -> SimplicialComplex:
    """Faces: squarefree sigma inside supp(b) with x^(b - sigma) in I."""
    if len(b) != I.nvars:
        raise InvalidInputError(f"multidegree {b} has the wrong length")
    if any(a < 0 for a in b):
        raise InvalidInputError(f"multidegree {b} has a negative entry")

    b = tuple(b)
    vertices = tuple(j for j, a in enumerate(b) if a > 0)
    gens = I.gens

    def member(mask: int) -> bool:
        shifted = list(b)
        for pos, j in enumerate(vertices):
            if mask >> pos & 1:
                shifted[j] -= 1
        return any(divides(g, shifted) for g in gens)

    if not member(0):
        return SimplicialComplex(vertices, frozenset())

    faces = {0}
    frontier = [0]
    while frontier:
        fresh = []
        for face in frontier:
            top = face.bit_length()
            for pos in range(top, len(vertices)):
                candidate = face | (1 << pos)
                if member(candidate):
                    faces.add(candidate)
                    fresh.append(candidate)
        frontier = fresh
    return SimplicialComplex(vertices, frozenset(faces))


# =====================================================
# BETTI TABLE / DEPTH
# =====================================================

def betti_table(
    I: MonomialIdeal, field: Field = RATIONALS, limits: Optional[ResourceLimits] = None
) -> BettiTable:
    if I.is_unit:
        raise UnitIdealError("S/I is the zero ring")
    if I.is_zero:
        raise ZeroIdealError("betti_table needs a nonzero ideal")
    limits = limits or default_limits()

    entries: dict[tuple[int, Exponents], int] = {(0, (0,) * I.nvars): 1}
    for b in lcm_closure(I, limits.closure):
        K = upper_koszul(I, b)
        if K.is_cone():
            continue
        for idx, dim in enumerate(reduced_homology_dims(K, field)):
            if dim:
                entries[(idx + 1, b)] = dim

    table = BettiTable(I.nvars, field, entries)
    if table.totals()[1] != len(I.gens):
        raise InvariantViolation(
            f"beta_1 = {table.totals()[1]} but the ideal has {len(I.gens)} minimal generators"
        )
    return table


def depth_quotient(
    I: MonomialIdeal, field: Field = RATIONALS, limits: Optional[ResourceLimits] = None
) -> int:
    if I.is_unit:
        raise UnitIdealError("depth of the zero ring is undefined")
    if I.is_zero:
        return I.nvars
    return I.nvars - betti_table(I, field, limits).projdim


def graded_betti_frame(table: BettiTable) -> pd.DataFrame:
    """Graded Betti table in the usual layout: rows j - i, columns i."""
    graded = table.graded()
    columns = list(range(table.projdim + 1))
    rows = sorted({j - i for i, j in graded})
    frame = pd.DataFrame(0, index=rows, columns=columns)
    for (i, j), value in graded.items():
        frame.loc[j - i, i] = value
    frame.loc["total"] = list(table.totals())
    return frame


# =====================================================
# DEPTH FUNCTION
# =====================================================

@dataclass(frozen=True)
class DepthReport:
    ideal: MonomialIdeal
    field: Field
    kmax: int
    depths: tuple[int, ...]
    projdims: tuple[int, ...]
    truncated: bool = False
    truncated_at: Optional[int] = None
    truncation_reason: Optional[str] = None

    @property
    def constant(self) -> bool:
        return len(set(self.depths)) == 1

    @property
    def stabilized(self) -> bool:
        return len(self.depths) >= 3 and len(set(self.depths[-3:])) == 1

    def check_consistency(self):
        n = self.ideal.nvars
        for k, (d, p) in enumerate(zip(self.depths, self.projdims), start=1):
            if d + p != n:
                raise InvariantViolation(f"depth + pd = {d + p} != {n} at k = {k}")


def _projdim_of_power(args) -> int:
    I, k, field, limits = args
    Ik = power(I, k)
    if Ik.is_zero:
        return 0
    return betti_table(Ik, field, limits).projdim


def depth_function(
    I: MonomialIdeal,
    kmax: int,
    field: Field = RATIONALS,
    limits: Optional[ResourceLimits] = None,
    workers: int = 1,
) -> DepthReport:
    if I.is_unit:
        raise UnitIdealError("the depth-function of the unit ideal is undefined")
    if kmax < 1:
        raise InvalidInputError("kmax must be at least 1")
    limits = limits or default_limits()

    budget = min(kmax, limits.kmax)
    jobs = [(I, k, field, limits) for k in range(1, budget + 1)]
    projdims: list[int] = []
    truncated_at = budget + 1 if budget < kmax else None
    reason = "kmax" if truncated_at else None

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_projdim_of_power, jobs)
            try:
                for pd_k in results:
                    projdims.append(pd_k)
            except ResourceLimitExceeded as exc:
                truncated_at, reason = len(projdims) + 1, exc.limit_name
    else:
        for job in jobs:
            try:
                projdims.append(_projdim_of_power(job))
            except ResourceLimitExceeded as exc:
                truncated_at, reason = job[1], exc.limit_name
                break

    if truncated_at is not None:
        logger.warning("depth-function truncated at k = %s (%s)", truncated_at, reason)

    n = I.nvars
    report = DepthReport(
        ideal=I,
        field=field,
        kmax=kmax,
        depths=tuple(n - p for p in projdims),
        projdims=tuple(projdims),
        truncated=truncated_at is not None,
        truncated_at=truncated_at,
        truncation_reason=reason,
    )
    report.check_consistency()
    return report


# =====================================================
# ANALYTIC SPREAD CONSISTENCY
# =====================================================

HOLDS, VIOLATED, NOT_APPLICABLE = "holds", "violated", "not-applicable"


@dataclass(frozen=True)
class SpreadConsistency:
    burch: str
    eisenbud_huneke_equality: str
    monotone_tail: str
    notes: tuple[str, ...] = field(default=())


def spread_consistency(
    n: int, analytic_spread: int, report: DepthReport, rees_cm: bool
) -> SpreadConsistency:
    depths = report.depths
    notes = []
    if not depths:
        return SpreadConsistency(NOT_APPLICABLE, NOT_APPLICABLE, NOT_APPLICABLE, ("no depths",))

    lowest = min(depths)
    if report.stabilized:
        burch = HOLDS if analytic_spread <= n - depths[-1] else VIOLATED
    else:
        burch = NOT_APPLICABLE
        notes.append("depth sequence not stabilized; Burch bound not asserted")

    if rees_cm and report.stabilized:
        eh1 = HOLDS if analytic_spread == n - lowest else VIOLATED
    else:
        eh1 = NOT_APPLICABLE

    if rees_cm:
        first = depths.index(lowest)
        eh2 = HOLDS if all(d == lowest for d in depths[first:]) else VIOLATED
    else:
        eh2 = NOT_APPLICABLE

    return SpreadConsistency(burch, eh1, eh2, tuple(notes))
