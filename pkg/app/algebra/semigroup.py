# app/algebra/semigroup.py

"""
Summand and normality conditions on the monoid C = N{a_1..a_r} of exponent
vectors, and degree-selection ideals.

    summand:   Z C ∩ N^n = C
    normal:    Z C ∩ Q>=0 C = C
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from app.algebra.cones import cone_lattice_hilbert_basis
from app.algebra.lattice import (
    AffineMonoid,
    HilbertBasisResult,
    hilbert_basis_lattice_positive,
    lattice_from_rows,
    monoid_contains,
)
from app.algebra.linalg import Row, rank_rational
from app.algebra.monomials import MonomialIdeal, PolyContext, minimalize, zero_ideal
from app.config import ResourceLimits, default_limits
from app.errors import ContextMismatchError, InvalidInputError

logger = logging.getLogger(__name__)

TRUE, FALSE, UNKNOWN = "true", "false", "unknown"


@dataclass(frozen=True)
class SummandVerdict:
    """`holds` is None when a resource ceiling stopped the check."""

    holds: Optional[bool]
    witness: Optional[Row] = None
    hilbert_basis: tuple[Row, ...] = ()
    method: str = "hilbert-basis"
    reason: Optional[str] = None

    @property
    def status(self) -> str:
        if self.holds is None:
            return UNKNOWN
        return TRUE if self.holds else FALSE


@dataclass(frozen=True)
class NormalityVerdict:
    holds: bool
    witness: Optional[Row] = None
    hilbert_basis: tuple[Row, ...] = ()


def monoid_of(I: MonomialIdeal) -> AffineMonoid:
    return AffineMonoid.from_vectors(I.gens, I.nvars)


def algebra_dim(M: AffineMonoid) -> int:
    if not M.generators:
        raise InvalidInputError("algebra_dim needs a nonzero monoid")
    return rank_rational(M.generators)


def _first_outside(M: AffineMonoid, basis: HilbertBasisResult) -> Optional[Row]:
    for h in basis.vectors:
        if monoid_contains(M, h) is None:
            return h
    return None


def summand_check(M: AffineMonoid, limits: Optional[ResourceLimits] = None) -> SummandVerdict:
    limits = limits or default_limits()
    if not M.generators:
        raise InvalidInputError("summand_check needs a nonzero monoid")
    L = lattice_from_rows(M.generators, M.ambient_dim)
    basis = hilbert_basis_lattice_positive(L, limits.hilbert_basis)
    witness = _first_outside(M, basis)
    logger.debug("summand check over %d Hilbert-basis elements: witness %s", len(basis.vectors), witness)
    if witness is not None:
        return SummandVerdict(False, witness=witness, hilbert_basis=basis.vectors)
    return SummandVerdict(True, hilbert_basis=basis.vectors)


def normality_check(M: AffineMonoid, limits: Optional[ResourceLimits] = None) -> NormalityVerdict:
    limits = limits or default_limits()
    basis = cone_lattice_hilbert_basis(M, limits.cone)
    witness = _first_outside(M, basis)
    return NormalityVerdict(witness is None, witness=witness, hilbert_basis=basis.vectors)


# =====================================================
# DEGREE-SELECTION IDEALS
# =====================================================

def _check_partition(blocks: Sequence[Sequence[int]]) -> int:
    flat = [j for block in blocks for j in block]
    n = len(flat)
    if not blocks or any(not block for block in blocks):
        raise InvalidInputError("blocks must be nonempty")
    if sorted(flat) != list(range(1, n + 1)):
        raise InvalidInputError(f"blocks {list(map(list, blocks))} do not partition 1..{n}")
    return n


def degree_selection(
    blocks: Sequence[Sequence[int]],
    subgroup: Sequence[Sequence[int]],
    ctx: Optional[PolyContext] = None,
    limits: Optional[ResourceLimits] = None,
) -> MonomialIdeal:
    """
    The ideal generated by all monomials whose block-multidegree is a minimal
    generator of H ∩ N^s. Blocks hold 1-based variable indices; `subgroup` lists
    generators of H ⊆ Z^s.
    """
    limits = limits or default_limits()
    n = _check_partition(blocks)
    ctx = ctx or PolyContext(n)
    if ctx.nvars != n:
        raise ContextMismatchError(f"blocks cover {n} variables, context has {ctx.nvars}")
    s = len(blocks)
    for h in subgroup:
        if len(h) != s:
            raise ContextMismatchError(f"subgroup generator {tuple(h)} is not in Z^{s}")

    L = lattice_from_rows(subgroup, s)
    if L.rank == 0:
        return zero_ideal(ctx)
    selected = hilbert_basis_lattice_positive(L, limits.hilbert_basis).vectors
    if not selected:
        return zero_ideal(ctx)

    gens = set()
    for a in selected:
        parts: list[list[tuple[int, ...]]] = []
        for block, degree in zip(blocks, a):
            parts.append(list(combinations_with_replacement(block, degree)))
        partial = [(0,) * n]
        for options in parts:
            grown = []
            for e in partial:
                for choice in options:
                    v = list(e)
                    for j in choice:
                        v[j - 1] += 1
                    grown.append(tuple(v))
            partial = grown
        gens.update(partial)

    logger.debug("degree-selection over %d blocks: %d selected degrees, %d monomials", s, len(selected), len(gens))
    return minimalize(gens, ctx)
