# tests/test_semigroup.py

import random

import pytest

from app.algebra.lattice import AffineMonoid, lattice_contains, lattice_from_rows, monoid_contains
from app.algebra.monomials import PolyContext, maximal_ideal, power
from app.algebra.semigroup import (
    FALSE,
    TRUE,
    UNKNOWN,
    SummandVerdict,
    algebra_dim,
    degree_selection,
    monoid_of,
    normality_check,
    summand_check,
)
from app.config import ResourceLimits
from app.errors import ContextMismatchError, InvalidInputError
from helpers import random_ideal


def test_triangle_is_normal_but_not_a_summand(triangle):
    M = monoid_of(triangle)
    verdict = summand_check(M)
    assert verdict.holds is False
    assert verdict.status == FALSE
    assert verdict.witness == (2, 0, 0)
    assert lattice_contains(lattice_from_rows(M.generators), verdict.witness)
    assert monoid_contains(M, verdict.witness) is None

    normal = normality_check(M)
    assert normal.holds is True
    assert normal.witness is None


def test_gapped_monoid_is_not_normal():
    verdict = normality_check(AffineMonoid.from_vectors([(0, 1), (2, 1), (3, 1)]))
    assert verdict.holds is False
    assert verdict.witness == (1, 1)


def test_summand_examples(path_p3, max_ideal):
    assert summand_check(monoid_of(path_p3)).holds is True
    verdict = summand_check(monoid_of(max_ideal(2, 2)))
    assert verdict.status == TRUE
    assert set(verdict.hilbert_basis) == {(2, 0), (1, 1), (0, 2)}


def test_status_strings():
    assert SummandVerdict(None, reason="ceiling").status == UNKNOWN


def test_algebra_dim(triangle, path_p3):
    assert algebra_dim(monoid_of(triangle)) == 3
    assert algebra_dim(monoid_of(path_p3)) == 2
    with pytest.raises(InvalidInputError):
        algebra_dim(AffineMonoid.from_vectors([], ambient_dim=2))


def test_degree_selection_examples():
    assert degree_selection([[1, 2]], [[2]]).gens == ((2, 0), (1, 1), (0, 2))
    assert degree_selection([[1], [2]], [[1, 1]]).gens == ((1, 1),)
    assert degree_selection([[1], [2]], [[1, -1]]).is_zero


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("d", [2, 3])
def test_one_block_selects_a_power_of_the_maximal_ideal(n, d):
    selected = degree_selection([list(range(1, n + 1))], [[d]])
    assert selected.gens == power(maximal_ideal(PolyContext(n)), d).gens


def test_summands_are_normal():
    rng = random.Random(21)
    summands = 0
    for _ in range(60):
        M = monoid_of(random_ideal(rng, rng.randint(2, 4), rng.randint(1, 3)))
        if summand_check(M).holds is not True:
            continue
        summands += 1
        assert normality_check(M).holds is True, M
    assert summands > 5


def test_degree_selection_rejects_bad_blocks():
    with pytest.raises(InvalidInputError):
        degree_selection([[1], [3]], [[1, 1]])
    with pytest.raises(InvalidInputError):
        degree_selection([[1, 2], []], [[1, 1]])
    with pytest.raises(ContextMismatchError):
        degree_selection([[1], [2]], [[1, 1, 1]])
    with pytest.raises(ContextMismatchError):
        degree_selection([[1], [2]], [[1, 1]], PolyContext(3))


@pytest.mark.slow
def test_degree_selection_ideals_are_summands():
    rng = random.Random(1234)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 6)
        variables = list(range(1, n + 1))
        rng.shuffle(variables)
        s = rng.randint(1, min(3, n))
        cuts = sorted(rng.sample(range(1, n), s - 1))
        blocks = [sorted(variables[a:b]) for a, b in zip([0] + cuts, cuts + [n])]
        subgroup = [[rng.randint(-1, 2) for _ in range(s)] for _ in range(rng.randint(1, 2))]
        I = degree_selection(blocks, subgroup, limits=ResourceLimits())
        if I.is_zero:
            continue
        checked += 1
        assert summand_check(monoid_of(I)).holds is True, (blocks, subgroup, I)
