# tests/test_graphs.py

import pytest

from app.algebra.monomials import Graph
from app.analysis.graphs import analyze_graph
from app.errors import InvalidInputError


def test_path_graph_chain_holds():
    report = analyze_graph(Graph(3, ((1, 2), (2, 3))), kmax=2)
    assert report.consistent
    assert [c.vertices for c in report.components] == [(1, 2, 3)]
    component = report.components[0]
    assert component.summand.holds is True
    assert component.chain_holds is True
    assert report.verdict.theorem_applies
    assert report.verdict.empirical.constant


def test_components_are_checked_separately():
    report = analyze_graph(Graph(5, ((1, 2), (3, 4))), kmax=2)
    assert [c.vertices for c in report.components] == [(1, 2), (3, 4)]
    assert all(c.chain_holds for c in report.components)
    assert str(report.components[1].ideal) == "(x1*x2)"
    assert report.verdict.summand.holds is True


def test_triangle_is_not_a_summand():
    report = analyze_graph(Graph(3, ((1, 2), (1, 3), (2, 3))), kmax=2)
    assert report.consistent
    component = report.components[0]
    assert component.summand.holds is False
    assert component.chain_holds is None
    assert component.algebra_normal is True


def test_graph_without_edges_is_rejected():
    with pytest.raises(InvalidInputError):
        analyze_graph(Graph(3, ()))
