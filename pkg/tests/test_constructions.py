from math import comb

import pytest

from maxcurve.analysis import (
    NodeSet,
    certificate_error,
    is_correct,
    is_independent,
    is_maximal_curve,
    maximal_lines,
    nodes_on_curve,
)
from maxcurve.combinatorics import d_count, dim_pi
from maxcurve.constructions import (
    CurveNotSamplable,
    SamplerExhausted,
    candidate_budget,
    chung_yao,
    corrupt_onto_line,
    diagonal_curve,
    enlarge_independent,
    enlarge_independent_trace,
    enlarge_on_curve,
    general_position_violation,
    grid_curves,
    principal_lattice,
    principal_lattice_certificate,
    random_general_position_lines,
    random_point_sampler,
    two_curve_correct_set,
)
from maxcurve.poly import Curve, Line, Poly, product_of_lines


@pytest.mark.parametrize("n", range(0, 7))
def test_principal_lattice(n):
    T = principal_lattice(n)
    assert len(T) == dim_pi(n) and is_correct(T, n)
    assert certificate_error(T, n, principal_lattice_certificate(n)) is None


@pytest.mark.parametrize("n", range(1, 5))
def test_chung_yao(n):
    L = random_general_position_lines(n, seed=n)
    assert general_position_violation(L.lines) is None
    X, cert = chung_yao(L)
    assert len(X) == comb(n + 2, 2) and is_correct(X, n)
    assert certificate_error(X, n, cert) is None
    assert set(maximal_lines(X, n)) == {l.normalized() for l in L.lines}


def test_general_position_violations():
    parallel = [Line.from_coeffs(1, 0, 0), Line.from_coeffs(1, 0, -1)]
    assert "parallel" in general_position_violation(parallel)
    concurrent = [Line.from_coeffs(1, 0, 0), Line.from_coeffs(0, 1, 0), Line.from_coeffs(1, 1, 0)]
    assert "concurrent" in general_position_violation(concurrent)


def test_generators_are_deterministic():
    a = random_general_position_lines(4, 9)
    b = random_general_position_lines(4, 9)
    assert a == b and a != random_general_position_lines(4, 10)


def test_grid_and_diagonal_curves():
    f, g = grid_curves(2, 3)
    assert f.total_degree == 2 and g.total_degree == 3
    d = diagonal_curve(4, 2)
    T = principal_lattice(4)
    assert len(nodes_on_curve(T, d)) == d_count(4, 2)
    with pytest.raises(ValueError):
        grid_curves(0, 1)


def test_enlarge_independent_rank_steps():
    start = NodeSet(((0, 0), (1, 1)))
    res = enlarge_independent_trace(start, 3, random_point_sampler(5))
    assert is_correct(res.nodes, 3)
    assert [b - a for a, b in zip(res.ranks, res.ranks[1:])] == [1] * (dim_pi(3) - 2)
    assert res.nodes.nodes[:2] == start.nodes
    with pytest.raises(ValueError):
        enlarge_independent(NodeSet(((0, 0), (1, 0), (2, 0))), 1, random_point_sampler(0))


@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 3), (4, 4)])
def test_enlarge_on_curve_reaches_d(n, k):
    q = product_of_lines([Line.from_coeffs(1, 0, -a) for a in range(k)])
    Y = enlarge_on_curve(NodeSet(()), q, n, seed=1)
    assert len(Y) == d_count(n, k) and is_independent(Y, n)
    assert all(q(p) == 0 for p in Y)


def test_enlarge_on_curve_degree_above_n():
    q = product_of_lines([Line.from_coeffs(1, 0, -a) for a in range(3)])
    Y = enlarge_on_curve(NodeSet(()), q, 2, seed=0)
    assert len(Y) == 6 and is_correct(Y, 2)


def test_enlarge_on_curve_budget_and_unsamplable():
    q = product_of_lines([Line.from_coeffs(1, 0, 0)])
    with pytest.raises(SamplerExhausted):
        enlarge_on_curve(NodeSet(()), q, 3, seed=0, budget=2)
    circle = Curve.from_factors([Poly.from_terms({(2, 0): 1, (0, 2): 1, (0, 0): -1})])
    with pytest.raises(CurveNotSamplable):
        enlarge_on_curve(NodeSet(()), circle, 2)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("MAXCURVE_BUDGET", "17")
    assert candidate_budget() == 17


@pytest.mark.parametrize("m,k,delta,size", [(2, 2, 0, 6), (2, 2, 1, 10), (3, 2, 0, 10), (2, 3, 1, 15), (3, 3, 1, 21)])
def test_two_curve_construction(m, k, delta, size):
    f, g = grid_curves(m, k)
    spec = two_curve_correct_set(f, g, delta)
    X, n = spec.nodes, spec.n
    assert n == m + k - 2 + delta and len(X) == size
    assert is_correct(X, n)
    assert is_maximal_curve(X, f, n) and is_maximal_curve(X, g, n)
    assert len(nodes_on_curve(X, f)) == m * k + dim_pi(m - 2 + delta) == d_count(n, m)


def test_two_curve_rejects_bad_delta():
    f, g = grid_curves(2, 2)
    with pytest.raises(ValueError):
        two_curve_correct_set(f, g, 2)


def test_corrupt_onto_line_breaks_independence():
    L = random_general_position_lines(3, 0)
    X, _ = chung_yao(L)
    line = L.lines[0]
    node = next(i for i, p in enumerate(X) if line(p) != 0)
    bad = corrupt_onto_line(X, line, node)
    assert len(nodes_on_curve(bad, line)) == 5 and not is_independent(bad, 3)
    with pytest.raises(ValueError):
        corrupt_onto_line(X, line, nodes_on_curve(X, line)[0])
