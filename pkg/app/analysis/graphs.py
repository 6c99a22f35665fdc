# app/analysis/graphs.py

"""
Edge ideals I(G). If K[G] is a direct summand of S then so is K[H] for every
connected component H, hence K[H] is normal, hence R(I(H)) is normal and
Cohen-Macaulay, and R(I(G)) is Cohen-Macaulay. The report checks each link of
that chain per component against the computation for G itself.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from app.algebra.monomials import RATIONALS, Field, Graph, MonomialIdeal, PolyContext, edge_ideal
from app.algebra.semigroup import SummandVerdict, monoid_of, normality_check
from app.analysis.rees import CERTIFIED_NOT_CM, rees_normality
from app.analysis.summand import is_summand
from app.analysis.verdict import DEFAULT_MAX_POWER, Verdict, analyze_constant_depth
from app.config import ResourceLimits, default_limits
from app.errors import InvalidInputError, InvariantViolation, ResourceLimitExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    ideal: MonomialIdeal
    summand: SummandVerdict
    algebra_normal: Optional[bool]
    rees_normal: Optional[bool]

    @property
    def chain_holds(self) -> Optional[bool]:
        """summand => K[H] normal => R(I(H)) normal; None when a link is unknown."""
        if self.summand.holds is not True:
            return None
        if self.algebra_normal is None or self.rees_normal is None:
            return None
        return self.algebra_normal and self.rees_normal


@dataclass(frozen=True)
class GraphReport:
    graph: Graph
    components: tuple[ComponentReport, ...]
    verdict: Verdict
    consistent: bool
    notes: tuple[str, ...] = field(default=())


def _component_ideal(G: Graph, vertices: tuple[int, ...]) -> MonomialIdeal:
    index = {v: i + 1 for i, v in enumerate(vertices)}
    edges = tuple((index[i], index[j]) for i, j in G.edges if i in index and j in index)
    sub = Graph(len(vertices), edges)
    return edge_ideal(sub, PolyContext(len(vertices)))


def _guarded(check, I: MonomialIdeal, limits: ResourceLimits, notes: list) -> Optional[bool]:
    try:
        return check(I, limits).holds
    except ResourceLimitExceeded as exc:
        notes.append(f"{I}: {exc}")
        return None


def analyze_graph(
    G: Graph,
    kmax: int = DEFAULT_MAX_POWER,
    field: Field = RATIONALS,
    limits: Optional[ResourceLimits] = None,
) -> GraphReport:
    if not G.edges:
        raise InvalidInputError("the graph has no edges; its edge ideal is zero")
    limits = limits or default_limits()
    notes: list[str] = []

    components = []
    for vertices in G.components():
        if len(vertices) < 2:
            continue
        I_H = _component_ideal(G, vertices)
        components.append(
            ComponentReport(
                vertices=vertices,
                ideal=I_H,
                summand=is_summand(I_H, limits),
                algebra_normal=_guarded(lambda J, lim: normality_check(monoid_of(J), lim), I_H, limits, notes),
                rees_normal=_guarded(rees_normality, I_H, limits, notes),
            )
        )

    verdict = analyze_constant_depth(edge_ideal(G), kmax, field=field, limits=limits)

    # -------------------------------------------------
    # Chain per component vs. global computation
    # -------------------------------------------------
    consistent = True
    for comp in components:
        if comp.chain_holds is False:
            consistent = False
            notes.append(f"component {list(comp.vertices)}: summand but a normality link fails")

    if verdict.summand.holds is True:
        failing = [c.vertices for c in components if c.summand.holds is False]
        if failing:
            consistent = False
            notes.append(f"G is a summand but components {[list(v) for v in failing]} are not")
        if all(c.chain_holds for c in components) and verdict.rees.kind == CERTIFIED_NOT_CM:
            consistent = False
            notes.append("components certify a Cohen-Macaulay Rees algebra, G's h-vector refutes it")

    if not consistent:
        raise InvariantViolation(f"edge ideal {verdict.ideal}: " + "; ".join(notes))

    logger.info("graph with %d components analyzed, consistent=%s", len(components), consistent)
    return GraphReport(G, tuple(components), verdict, consistent, tuple(notes))
