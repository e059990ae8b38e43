"""Smoke tests for the exgraph python module."""

import json

import pytest

import exgraph

A2 = [[0, 1], [-1, 0]]
A3 = [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]


def test_check_symmetrizer():
    assert exgraph.check_symmetrizer([[0, 1], [-2, 0]]) == [2, 1]
    with pytest.raises(exgraph.NotSkewSymmetrizable):
        exgraph.check_symmetrizer([[0, 1], [1, 0]])


def test_mutate_matrix():
    assert exgraph.mutate_matrix(A2, 1) == [[0, -1], [1, 0]]


def test_mutate_seed():
    seed = exgraph.mutate_seed(A2, [1])
    assert seed["variables"] == ["x1^-1*x2 + x1^-1", "x2"]
    assert seed["C"] == [[-1, 1], [0, 1]]
    assert exgraph.mutate_seed(A2, [1, 1])["path"] == []
    assert exgraph.mutate_seed(A2, [])["C"] == [[1, 0], [0, 1]]


def test_pattern_enumeration():
    p = exgraph.Pattern(A2)
    assert p.complete
    assert (p.num_vertices, p.num_edges) == (5, 5)
    assert len(p.clusters()) == 5
    a3 = exgraph.Pattern(A3)
    assert (a3.num_vertices, a3.num_edges) == (14, 21)


def test_pattern_queries():
    p = exgraph.Pattern(A2)
    v, w = p.edges()[0]
    assert p.geodesics(v, w) == [[v, w]]
    u = p.minimal_face(v, w)
    assert len(u) == 1

    completion = p.bongartz(["x2"], [])
    assert "x2" in completion["cluster"]

    proj = p.projection(["x2"])
    assert proj["ok"]


def test_verify_nlf():
    rep = exgraph.Pattern(A3).verify_nlf()
    assert rep["ok"]
    assert rep["pairs_checked"] == 91
    assert rep["violations"] == 0
    assert rep["routes_agree"]


def test_graph_json():
    p = exgraph.Pattern(A2)
    data = json.loads(p.to_json())
    assert data["complete"]
    assert len(data["vertices"]) == 5


def test_incomplete_budget():
    markov = exgraph.Pattern([[0, 2, -2], [-2, 0, 2], [2, -2, 0]], max_depth=5)
    assert not markov.complete
    with pytest.raises(exgraph.IncompleteGraph):
        markov.verify_nlf()
