# app/algebra/lattice.py

"""
Integer lattices in Hermite normal form, affine monoids N{a_1..a_r}, and the
completion procedure for Hilbert bases of L ∩ N^N.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from app.algebra.linalg import Row, hermite_normal_form
from app.config import default_limits
from app.errors import ContextMismatchError, InvalidInputError, ResourceLimitExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerLattice:
    ambient_dim: int
    basis: tuple[Row, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)


@dataclass(frozen=True)
class AffineMonoid:
    ambient_dim: int
    generators: tuple[Row, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]], ambient_dim: Optional[int] = None) -> "AffineMonoid":
        gens: list[Row] = []
        for v in vectors:
            v = tuple(int(a) for a in v)
            if ambient_dim is None:
                ambient_dim = len(v)
            if len(v) != ambient_dim:
                raise ContextMismatchError(f"generator {v} is not in dimension {ambient_dim}")
            if any(a < 0 for a in v):
                raise InvalidInputError(f"monoid generator {v} has a negative entry")
            if not any(v):
                continue
            if v not in gens:
                gens.append(v)
        if ambient_dim is None:
            raise InvalidInputError("an affine monoid needs an ambient dimension")
        return cls(ambient_dim, tuple(gens))


@dataclass(frozen=True)
class HilbertBasisResult:
    vectors: tuple[Row, ...]
    system: str
    stats: dict = field(default_factory=dict, compare=False, hash=False)


def hilbert_order(v: Sequence[int]):
    """Degree first, then descending lexicographic: (2,0,0) precedes (0,0,2)."""
    return (sum(v), tuple(-a for a in v))


# =====================================================
# LATTICES
# =====================================================

def lattice_from_rows(vectors: Iterable[Sequence[int]], ambient_dim: Optional[int] = None) -> IntegerLattice:
    rows = [tuple(int(a) for a in v) for v in vectors]
    if ambient_dim is None:
        ambient_dim = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != ambient_dim:
            raise ContextMismatchError(f"row {r} is not in dimension {ambient_dim}")
    return IntegerLattice(ambient_dim, tuple(hermite_normal_form(rows, ambient_dim)))


def lattice_coordinates(L: IntegerLattice, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Integer coefficients of v over the HNF basis, or None when v is not in L."""
    if len(v) != L.ambient_dim:
        raise ContextMismatchError(f"vector {tuple(v)} is not in dimension {L.ambient_dim}")
    residual = list(v)
    coords = []
    for row, col in zip(L.basis, L.pivots):
        if any(residual[:col]):
            return None
        a = row[col]
        if residual[col] % a:
            return None
        q = residual[col] // a
        coords.append(q)
        if q:
            residual = [x - q * y for x, y in zip(residual, row)]
    if any(residual):
        return None
    return tuple(coords)


def lattice_contains(L: IntegerLattice, v: Sequence[int]) -> bool:
    return lattice_coordinates(L, v) is not None


# =====================================================
# MONOID MEMBERSHIP
# =====================================================

def monoid_contains(M: AffineMonoid, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """
    Nonnegative coefficients expressing v over M.generators, or None. The search
    is exhaustive, so None proves non-membership.
    """
    v = tuple(int(a) for a in v)
    if len(v) != M.ambient_dim:
        raise ContextMismatchError(f"vector {v} is not in dimension {M.ambient_dim}")
    if any(a < 0 for a in v):
        raise InvalidInputError(f"{v} has a negative entry")

    gens = M.generators
    r = len(gens)
    covered = [set() for _ in range(r + 1)]
    for i in range(r - 1, -1, -1):
        covered[i] = covered[i + 1] | {k for k, a in enumerate(gens[i]) if a}

    failed: set[tuple[int, tuple[int, ...]]] = set()

    def search(i: int, rest: tuple[int, ...]) -> Optional[tuple[int, ...]]:
        if not any(rest):
            return (0,) * (r - i)
        if i == r or (i, rest) in failed:
            return None
        if any(a and k not in covered[i] for k, a in enumerate(rest)):
            failed.add((i, rest))
            return None
        g = gens[i]
        bound = min(rest[k] // a for k, a in enumerate(g) if a)
        for c in range(bound, -1, -1):
            nxt = tuple(x - c * a for x, a in zip(rest, g)) if c else rest
            found = search(i + 1, nxt)
            if found is not None:
                return (c,) + found
        failed.add((i, rest))
        return None

    return search(0, v)


# =====================================================
# COMPLETION PROCEDURE
# =====================================================

def _conformal(g: Row, s: Row) -> bool:
    # g ⊑ s: same orthant and |g_i| <= |s_i|
    for a, b in zip(g, s):
        if a and (a * b < 0 or abs(a) > abs(b)):
            return False
    return True


def _same_orthant(f: Row, g: Row) -> bool:
    return all(a * b >= 0 for a, b in zip(f, g))


def _normal_form(s: Row, G: list[Row]) -> Row:
    reduced = True
    while reduced and any(s):
        reduced = False
        for g in G:
            if _conformal(g, s):
                s = tuple(a - b for a, b in zip(s, g))
                reduced = True
                break
    return s


def hilbert_basis_lattice_positive(L: IntegerLattice, limit: Optional[int] = None) -> HilbertBasisResult:
    """
    Minimal generating set of the monoid L ∩ N^N. Runs the completion procedure
    towards the Graver basis of L (conformal reduction, critical pairs taken in
    order of 1-norm) and keeps its nonnegative, componentwise-minimal members.
    """
    if L.rank == 0:
        raise InvalidInputError("the zero lattice has no Hilbert basis")
    limit = limit or default_limits().hilbert_basis

    G: list[Row] = []
    for row in L.basis:
        for v in (row, tuple(-a for a in row)):
            if v not in G:
                G.append(v)

    queue: list[tuple[int, Row]] = []
    pushed: set[Row] = set()

    def push(f: Row, g: Row):
        if _same_orthant(f, g):
            return
        s = tuple(a + b for a, b in zip(f, g))
        if any(s) and s not in pushed:
            pushed.add(s)
            heapq.heappush(queue, (sum(abs(a) for a in s), s))

    for i, f in enumerate(G):
        for g in G[i + 1:]:
            push(f, g)

    iterations = 0
    while queue:
        _, s = heapq.heappop(queue)
        iterations += 1
        r = _normal_form(s, G)
        if any(r):
            for g in G:
                push(r, g)
            G.append(r)
            if len(G) > limit:
                raise ResourceLimitExceeded("hilbert_basis", limit)

    nonneg = sorted(
        (v for v in G if any(v) and all(a >= 0 for a in v)), key=hilbert_order
    )
    minimal: list[Row] = []
    for v in nonneg:
        if not any(all(a <= b for a, b in zip(h, v)) for h in minimal):
            minimal.append(v)

    logger.debug(
        "completion for rank-%d lattice in Z^%d: %d iterations, %d elements, %d in the Hilbert basis",
        L.rank, L.ambient_dim, iterations, len(G), len(minimal),
    )
    return HilbertBasisResult(
        vectors=tuple(sorted(minimal, key=hilbert_order)),
        system=f"L ∩ N^{L.ambient_dim}, L of rank {L.rank}",
        stats={"iterations": iterations, "completion_size": len(G)},
    )
