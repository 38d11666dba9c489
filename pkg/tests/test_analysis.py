import random
from fractions import Fraction

import pytest
import sympy

from maxcurve.analysis import (
    GC,
    INCONCLUSIVE,
    NOT_GC,
    DependentNodeSetError,
    DuplicateNodeError,
    GcCertificate,
    NodeNotIndependentError,
    NodeSet,
    NotSquarefreeError,
    certificate_error,
    certify_gc,
    check_complement_correct,
    fundamental_polynomial,
    fundamental_witness,
    interpolate,
    is_correct,
    is_independent,
    is_maximal_curve,
    lagrange_interpolate,
    maximal_lines,
    nodes_on_curve,
    overfull_lines,
    uses_curve,
    vandermonde,
    vandermonde_rank,
)
from maxcurve.constructions import chung_yao, principal_lattice, random_general_position_lines
from maxcurve.poly import Curve, DegreeBoundError, Line, Poly, evaluate, product_of_lines


def sympy_rank(X, n):
    V = vandermonde(X, n)
    return sympy.Matrix(V.rows, V.cols, [sympy.Rational(v.numerator, v.denominator) for v in V.entries]).rank()


def test_duplicate_nodes_rejected():
    with pytest.raises(DuplicateNodeError, match="duplicate node"):
        NodeSet(((0, 0), (1, 2), (Fraction(0), 0)))


def test_rank_matches_sympy_on_random_sets():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 3)
        pts = {(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(rng.randint(1, 12))}
        X = NodeSet(tuple(pts))
        assert vandermonde_rank(X, n) == sympy_rank(X, n)


def test_correct_and_independent():
    T = principal_lattice(3)
    assert is_correct(T, 3) and is_independent(T, 3)
    assert not is_correct(T, 2) and not is_independent(T, 2)
    assert is_independent(T.without([0, 1]), 3) and not is_correct(T.without([0]), 3)
    collinear = NodeSet(((0, 0), (1, 1), (2, 2)))
    assert not is_independent(collinear, 1)
    assert list(overfull_lines(collinear, 1).values()) == [(0, 1, 2)]


def test_fundamental_polynomial_of_lattice_node():
    T = principal_lattice(2)
    A = T.index((2, 0))
    p = fundamental_polynomial(T, A, 2)
    assert p.padded(2) == Poly.from_terms({(2, 0): Fraction(1, 2), (1, 0): Fraction(-1, 2)}).padded(2)
    for i, B in enumerate(T):
        assert evaluate(p, B) == (1 if i == A else 0)


def test_fundamental_witness_non_unique_and_missing():
    X = NodeSet(((0, 0), (1, 0)))
    p, unique = fundamental_witness(X, 0, 2)
    assert not unique and evaluate(p, (0, 0)) == 1 and evaluate(p, (1, 0)) == 0
    with pytest.raises(NodeNotIndependentError):
        fundamental_witness(NodeSet(((0, 0), (1, 0), (2, 0))), 0, 1)


def test_interpolation_roundtrip():
    T = principal_lattice(3)
    rng = random.Random(0)
    data = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in T]
    for q in (interpolate(T, data, 3), lagrange_interpolate(T, data, 3)):
        assert [evaluate(q, a) for a in T] == data
    with pytest.raises(DependentNodeSetError):
        interpolate(NodeSet(((0, 0), (1, 0), (2, 0))), [1, 2, 3], 1)


def test_uses_curve_on_lattice():
    T = principal_lattice(2)
    A = T.index((0, 0))
    top = product_of_lines([Line.from_coeffs(1, 1, -2)])
    assert uses_curve(T, A, top, 2)
    assert not uses_curve(T, T.index((2, 0)), top, 2)  # on the curve
    with pytest.raises(DegreeBoundError):
        uses_curve(T, A, product_of_lines([Line.from_coeffs(1, 0, -c) for c in range(3)]), 2)


def test_maximal_curves_and_complements():
    T = principal_lattice(4)
    x_lines = product_of_lines([Line.from_coeffs(1, 0, -c) for c in range(2)])
    assert is_maximal_curve(T, x_lines, 4) and check_complement_correct(T, x_lines, 4)
    off = product_of_lines([Line.from_coeffs(1, 0, -5)])
    assert not is_maximal_curve(T, off, 4) and not check_complement_correct(T, off, 4)
    with pytest.raises(NotSquarefreeError):
        is_maximal_curve(T, Curve((Line.from_coeffs(1, 0, 0),) * 2, False), 4)


def test_nodes_on_curve_accepts_all_forms():
    T = principal_lattice(2)
    line = Line.from_coeffs(0, 1, 0)
    assert nodes_on_curve(T, line) == nodes_on_curve(T, line.as_poly()) == nodes_on_curve(T, product_of_lines([line]))


def test_maximal_lines_on_lattice():
    assert len(maximal_lines(principal_lattice(4), 4)) == 3


def test_certify_gc_on_chung_yao():
    X, cert = chung_yao(random_general_position_lines(3, 2))
    assert certify_gc(X, 3, hint=cert).status == GC
    found = certify_gc(X, 3)
    assert found.status == GC and certificate_error(X, 3, found.certificate) is None


def test_certify_gc_bad_hint():
    X, cert = chung_yao(random_general_position_lines(2, 0))
    bad = GcCertificate((cert[1],) + cert.lines[1:])
    assert certificate_error(X, 2, bad) is not None
    assert certify_gc(X, 2, hint=bad, search=False).status == INCONCLUSIVE
    assert certify_gc(X, 2, hint=bad).status == GC


def test_certify_gc_rejects_conic_configuration():
    # five points on an irreducible conic plus one off it: 2-correct, not GC
    pts = [(1, 0), (-1, 0), (0, 1), (0, -1), (Fraction(3, 5), Fraction(4, 5)), (5, 7)]
    X = NodeSet(tuple(pts))
    assert is_correct(X, 2)
    res = certify_gc(X, 2)
    assert res.status == NOT_GC and res.witness == 0
    # the off-conic node's fundamental polynomial is the circle itself
    circle = Poly.from_terms({(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert uses_curve(X, 5, Curve.from_factors([circle]), 2)
    assert certify_gc(principal_lattice(2).without([0]), 2).status == NOT_GC
