# tests/test_verdict.py

import pytest

from app.algebra.betti import HOLDS, DepthReport
from app.analysis import verdict as verdict_module
from app.analysis.rees import CERTIFIED_CM, CERTIFIED_NOT_CM
from app.analysis.verdict import analyze_constant_depth
from app.config import ResourceLimits
from app.errors import InvariantViolation
from helpers import ideal


def test_path_satisfies_the_criterion(path_p3):
    v = analyze_constant_depth(path_p3, kmax=3, degree_bound=12)
    assert v.summand.holds is True
    assert v.summand.method == "retract"
    assert v.rees.kind == CERTIFIED_CM
    assert v.theorem_applies
    assert v.empirical.depths == (1, 1, 1)
    assert v.analytic_spread == 2
    assert v.consistency.burch == HOLDS
    assert v.consistency.eisenbud_huneke_equality == HOLDS
    assert v.fiber.holds is True


def test_triangle_fails_the_summand_hypothesis(triangle):
    v = analyze_constant_depth(triangle, kmax=3, degree_bound=12)
    assert v.summand.holds is False
    assert not v.theorem_applies
    assert v.empirical.depths == (1, 0, 0)
    assert not v.empirical.constant


def test_mixed_degrees_skip_the_spread():
    v = analyze_constant_depth(ideal(3, (1, 0, 0), (0, 1, 1)), kmax=2)
    assert v.analytic_spread is None
    assert v.consistency is None
    assert any("mixed generator degrees" in note for note in v.notes)


def test_unknown_summand_is_noted(triangle):
    v = analyze_constant_depth(triangle, kmax=2, degree_bound=12, limits=ResourceLimits(hilbert_basis=1))
    assert v.summand.holds is None
    assert not v.theorem_applies
    assert any(note.startswith("summand unknown") for note in v.notes)


def test_truncation_is_noted(path_p3):
    v = analyze_constant_depth(path_p3, kmax=4, degree_bound=12, limits=ResourceLimits(kmax=2))
    assert v.empirical.truncated
    assert any("truncated at k = 3" in note for note in v.notes)


def test_ceiling_before_two_depths_is_not_a_contradiction(path_p3):
    v = analyze_constant_depth(path_p3, kmax=3, degree_bound=12, limits=ResourceLimits(closure=1))
    assert v.theorem_applies
    assert v.empirical.depths == ()
    assert v.empirical.truncated_at == 1
    assert any("constancy not checked" in note for note in v.notes)


def test_contradicting_depths_raise(path_p3, monkeypatch):
    def fake_depths(I, kmax, field, limits, workers):
        return DepthReport(I, field, kmax, depths=(1, 0), projdims=(2, 3))

    monkeypatch.setattr(verdict_module, "depth_function", fake_depths)
    with pytest.raises(InvariantViolation):
        analyze_constant_depth(path_p3, kmax=2, degree_bound=12)


@pytest.mark.slow
def test_hv_iii_depth_is_constant(hv_iii):
    v = analyze_constant_depth(hv_iii, kmax=4, degree_bound=12)
    assert v.summand.method == "retract"
    assert v.empirical.depths == (3, 3, 3, 3)
    assert v.empirical.constant
    if v.rees.kind == CERTIFIED_CM:
        assert v.theorem_applies


@pytest.mark.slow
def test_ex_no_verdict(ex_no):
    v = analyze_constant_depth(ex_no, kmax=6, degree_bound=20, window=4)
    assert v.summand.holds is True
    assert v.rees.kind == CERTIFIED_NOT_CM
    assert not v.theorem_applies
    assert v.empirical.depths == (3,) * 6
    assert v.analytic_spread == 3
