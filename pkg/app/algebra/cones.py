# app/algebra/cones.py

"""
Rational cones Q>=0 C of affine monoids and the Hilbert basis of their
normalization Z C ∩ Q>=0 C.

Everything is computed in lattice coordinates of Z C, where the cone is
full-dimensional and the lattice is Z^d. Vectors handed back to callers are in
ambient coordinates.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Optional, Sequence

from app.algebra.lattice import (
    AffineMonoid,
    HilbertBasisResult,
    IntegerLattice,
    hilbert_order,
    lattice_coordinates,
    lattice_from_rows,
)
from app.algebra.linalg import Row, determinant, inverse_rational, kernel_vectors, rank_rational
from app.config import default_limits
from app.errors import ContextMismatchError, InvalidInputError, ResourceLimitExceeded

logger = logging.getLogger(__name__)


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _coordinates(M: AffineMonoid) -> tuple[IntegerLattice, list[Row]]:
    if not M.generators:
        raise InvalidInputError("the zero monoid spans no cone")
    L = lattice_from_rows(M.generators, M.ambient_dim)
    return L, [lattice_coordinates(L, g) for g in M.generators]


def _facets(points: list[Row], d: int, limit: int) -> list[Row]:
    """Facet normals of the full-dimensional cone spanned by `points` in Q^d."""
    facets: set[Row] = set()
    examined = 0
    for subset in combinations(points, d - 1):
        examined += 1
        if examined > limit:
            raise ResourceLimitExceeded("cone", limit)
        if d > 1 and rank_rational(subset) != d - 1:
            continue
        normals = kernel_vectors(list(subset), d)
        if len(normals) != 1:
            continue
        y = normals[0]
        values = [_dot(y, p) for p in points]
        if all(v >= 0 for v in values):
            facets.add(y)
        elif all(v <= 0 for v in values):
            facets.add(tuple(-a for a in y))
    logger.debug("%d facet candidates examined, %d facets in dimension %d", examined, len(facets), d)
    return sorted(facets)


def support_inequalities(M: AffineMonoid, limit: Optional[int] = None) -> list[Row]:
    """
    Primitive integer facet normals of Q>=0 C, in lattice coordinates of Z C:
    a point with coordinates c lies in the cone iff y.c >= 0 for every normal y.
    """
    L, points = _coordinates(M)
    return _facets(points, L.rank, limit or default_limits().cone)


def cone_contains(M: AffineMonoid, v: Sequence[int], limit: Optional[int] = None) -> bool:
    """v ∈ Z C ∩ Q>=0 C."""
    if len(v) != M.ambient_dim:
        raise ContextMismatchError(f"vector {tuple(v)} is not in dimension {M.ambient_dim}")
    L, points = _coordinates(M)
    c = lattice_coordinates(L, v)
    if c is None:
        return False
    return all(_dot(y, c) >= 0 for y in _facets(points, L.rank, limit or default_limits().cone))


def _parallelepiped(A: list[Row]) -> set[Row]:
    """Nonzero points of Z^d in {sum λ_i a_i : 0 <= λ_i < 1}, for linearly independent rows A."""
    d = len(A)
    inverse = inverse_rational(A)

    def reduce(x: Sequence[int]) -> Row:
        lam = [sum(Fraction(x[i]) * inverse[i][j] for i in range(d)) for j in range(d)]
        frac = [t - floor(t) for t in lam]
        point = [sum(frac[j] * A[j][k] for j in range(d)) for k in range(d)]
        return tuple(int(p) for p in point)

    zero = (0,) * d
    seen = {zero}
    frontier = [zero]
    while frontier:
        fresh = []
        for x in frontier:
            for j in range(d):
                y = reduce(tuple(a + (1 if k == j else 0) for k, a in enumerate(x)))
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    seen.discard(zero)
    return seen


def cone_lattice_hilbert_basis(M: AffineMonoid, limit: Optional[int] = None) -> HilbertBasisResult:
    """
    Minimal Hilbert basis of Z C ∩ Q>=0 C. Every element of it is a generator or
    a lattice point in the half-open parallelepiped of some linearly independent
    d-subset of generators; the candidates that do not split as a sum of another
    candidate and a nonzero cone point form the basis.
    """
    limit = limit or default_limits().cone
    L, points = _coordinates(M)
    d = L.rank
    facets = _facets(points, d, limit)

    def in_cone(c: Sequence[int]) -> bool:
        return all(_dot(y, c) >= 0 for y in facets)

    candidates: set[Row] = set(points)
    simplices = 0
    for subset in combinations(points, d):
        if determinant(subset) == 0:
            continue
        simplices += 1
        candidates |= _parallelepiped(list(subset))
        if len(candidates) > limit:
            raise ResourceLimitExceeded("cone", limit)

    basis = []
    for h in candidates:
        reducible = any(
            s != h and in_cone(tuple(a - b for a, b in zip(h, s))) for s in candidates
        )
        if not reducible:
            basis.append(h)

    ambient = [
        tuple(sum(c * row[k] for c, row in zip(h, L.basis)) for k in range(M.ambient_dim))
        for h in basis
    ]
    logger.debug(
        "normalization of %d generators: %d facets, %d simplices, %d candidates, %d basis elements",
        len(points), len(facets), simplices, len(candidates), len(ambient),
    )
    return HilbertBasisResult(
        vectors=tuple(sorted(ambient, key=hilbert_order)),
        system=f"Z C ∩ Q>=0 C, rank {d} in Z^{M.ambient_dim}",
        stats={"facets": len(facets), "simplices": simplices, "candidates": len(candidates)},
    )
