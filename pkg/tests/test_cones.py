# tests/test_cones.py

import pytest

from app.algebra.cones import cone_contains, cone_lattice_hilbert_basis, support_inequalities
from app.algebra.lattice import AffineMonoid, lattice_contains, lattice_from_rows, monoid_contains
from app.errors import InvalidInputError, ResourceLimitExceeded

GAPPED = AffineMonoid.from_vectors([(0, 1), (2, 1), (3, 1)])


def test_support_inequalities_of_a_plane_cone():
    assert support_inequalities(GAPPED) == [(-1, 3), (1, 0)]


def test_cone_membership():
    assert cone_contains(GAPPED, (1, 1))
    assert cone_contains(GAPPED, (3, 1))
    assert not cone_contains(GAPPED, (1, 0))
    assert not cone_contains(GAPPED, (4, 1))


def test_normalization_fills_the_gap():
    result = cone_lattice_hilbert_basis(GAPPED)
    assert result.vectors == ((0, 1), (1, 1), (2, 1), (3, 1))
    assert monoid_contains(GAPPED, (1, 1)) is None
    assert result.stats["facets"] == 2


def test_triangle_monoid_is_normal(triangle):
    M = AffineMonoid.from_vectors(triangle.gens)
    result = cone_lattice_hilbert_basis(M)
    assert set(result.vectors) == set(triangle.gens)
    # normalization is taken in the group the monoid generates, not in Z^3
    assert not cone_contains(M, (1, 0, 0))
    assert cone_contains(M, (1, 1, 2))
    assert lattice_contains(lattice_from_rows(triangle.gens), (2, 0, 0))
    assert not cone_contains(M, (2, 0, 0))


def test_rank_one_cone_uses_the_generated_lattice():
    M = AffineMonoid.from_vectors([(2, 4)])
    assert cone_lattice_hilbert_basis(M).vectors == ((2, 4),)
    assert not cone_contains(M, (1, 2))


def test_basis_elements_lie_in_the_cone():
    M = AffineMonoid.from_vectors([(1, 0, 0), (0, 1, 0), (1, 0, 2), (0, 1, 2)])
    result = cone_lattice_hilbert_basis(M)
    for h in result.vectors:
        assert cone_contains(M, h)
    for g in M.generators:
        assert g in result.vectors


def test_degenerate_inputs():
    with pytest.raises(InvalidInputError):
        cone_lattice_hilbert_basis(AffineMonoid.from_vectors([], ambient_dim=2))
    with pytest.raises(ResourceLimitExceeded):
        cone_lattice_hilbert_basis(GAPPED, limit=1)
