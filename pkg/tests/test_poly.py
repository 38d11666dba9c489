from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from maxcurve.combinatorics import dim_pi
from maxcurve.poly import (
    CoincidentPointsError,
    Curve,
    DegreeBoundError,
    Line,
    Poly,
    UnfactoredCurveError,
    evaluate,
    gcd_certificate,
    line_through,
    monomial_index,
    monomials,
    multiply,
    product_of_lines,
)

sx, sy = sympy.symbols("x y")
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def polys(draw, max_degree=3):
    n = draw(st.integers(0, max_degree))
    return Poly(n, tuple(draw(rationals) for _ in range(dim_pi(n))))


def to_sympy(p):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sx**i * sy**j for (i, j), c in p.terms().items()),
        sympy.Integer(0),
    )


def test_graded_lex_order():
    assert monomials(2) == ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    for idx, (i, j) in enumerate(monomials(5)):
        assert monomial_index(i, j) == idx


@settings(max_examples=80)
@given(polys(), polys())
def test_product_matches_sympy(p, q):
    assert sympy.expand(to_sympy(multiply(p, q)) - to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=80)
@given(polys(), rationals, rationals)
def test_evaluate_matches_sympy(p, x, y):
    expected = to_sympy(p).subs({sx: sympy.Rational(x.numerator, x.denominator),
                                 sy: sympy.Rational(y.numerator, y.denominator)})
    value = evaluate(p, (x, y))
    assert sympy.Rational(value.numerator, value.denominator) == expected


@given(polys(), polys())
def test_sum_and_difference(p, q):
    s = p + q - q
    n = max(p.degree_bound, q.degree_bound)
    assert s.padded(n) == p.padded(n)


def test_degree_and_padding():
    p = Poly.from_terms({(2, 1): 3, (0, 0): 1})
    assert p.degree == 3
    assert Poly.zero(4).degree == -1
    assert len(p.padded(5)) == 21
    with pytest.raises(DegreeBoundError):
        p.padded(2)


def test_proportional_and_monic():
    p = Poly.from_terms({(1, 0): 2, (0, 1): 4})
    assert p.is_proportional(p * Fraction(-3, 7))
    assert not p.is_proportional(Poly.from_terms({(1, 0): 1, (0, 1): 1}))
    assert p.monic().coeffs[-1] == 1


def test_str():
    p = Poly.from_terms({(2, 0): Fraction(1, 2), (1, 0): Fraction(-1, 2)})
    assert str(p) == "(-1/2)*x + (1/2)*x^2"
    assert str(Poly.zero()) == "0"
    assert str(Line.from_coeffs(1, 1, -8)) == "x + y - 8 = 0"


def test_line_normal_form():
    l = Line.from_coeffs(Fraction(-1, 2), 1, Fraction(3, 2))
    assert (l.a, l.b, l.c) == (1, -2, -3)
    assert l == Line.from_coeffs(2, -4, -6)
    with pytest.raises(ValueError):
        Line.from_coeffs(0, 0, 1)


def test_line_through_and_intersection():
    l = line_through((0, 0), (2, 2))
    m = line_through((0, 2), (2, 0))
    assert l.intersection(m) == (1, 1)
    assert l.intersection(line_through((0, 1), (1, 2))) is None
    with pytest.raises(CoincidentPointsError):
        line_through((1, 1), (1, 1))


def test_point_at_stays_on_line():
    for coeffs in ((1, 0, -3), (0, 1, 2), (3, -7, 5)):
        l = Line.from_coeffs(*coeffs)
        pts = {l.point_at(t) for t in range(4)}
        assert len(pts) == 4 and all(l(p) == 0 for p in pts)


def test_curve_squarefree_certification():
    a, b = Line.from_coeffs(1, 0, 0), Line.from_coeffs(0, 1, 0)
    assert product_of_lines([a, b]).squarefree_certified
    assert not product_of_lines([a, Line.from_coeffs(2, 0, 0)]).squarefree_certified
    conic = Poly.from_terms({(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert Curve.from_factors([conic, a]).squarefree_certified
    assert not Curve.from_factors([conic, a], components_squarefree=False).squarefree_certified


def test_curve_expand_and_call():
    f = product_of_lines([Line.from_coeffs(1, 0, 0), Line.from_coeffs(1, 0, -1)])
    assert f.total_degree == 2
    assert str(f.expand()) == "-x + x^2"
    assert f((1, 5)) == 0 and f((2, 0)) == 2


def test_gcd_certificate_lines():
    a, b, c = Line.from_coeffs(1, 0, 0), Line.from_coeffs(1, 0, -1), Line.from_coeffs(0, 1, 0)
    h, g1, g2 = gcd_certificate(product_of_lines([a, b]), product_of_lines([b, c]))
    assert h.lines() == (b,) and g1.lines() == (a,) and g2.lines() == (c,)
    h, g1, g2 = gcd_certificate(product_of_lines([a]), product_of_lines([c]))
    assert h is None


def test_gcd_certificate_refuses_hidden_components():
    conic = Poly.from_terms({(2, 0): 1, (0, 0): -1})  # (x-1)(x+1) given unfactored
    with pytest.raises(UnfactoredCurveError):
        gcd_certificate(Curve.from_factors([conic]), product_of_lines([Line.from_coeffs(1, 0, -1)]))
    circle = Poly.from_terms({(2, 0): 1, (0, 2): 1, (0, 0): -1})
    with pytest.raises(UnfactoredCurveError):
        gcd_certificate(Curve.from_factors([circle]), Curve.from_factors([conic]))
    h, _, _ = gcd_certificate(Curve.from_factors([circle]), product_of_lines([Line.from_coeffs(1, 0, -5)]))
    assert h is None
