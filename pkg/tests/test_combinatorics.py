from itertools import product

import pytest
from hypothesis import given, strategies as st

from maxcurve.combinatorics import (
    d_count,
    d_tilde,
    dim_pi,
    hilbert_count,
    rect_slice,
    sigma,
    triangular_lattice,
    triple_sigma_expressions,
)

small = st.integers(min_value=0, max_value=20)


def test_dim_pi_values():
    assert [dim_pi(n) for n in range(-3, 5)] == [0, 0, 0, 1, 3, 6, 10, 15]


def test_dim_pi_counts_monomials():
    for n in range(10):
        assert dim_pi(n) == sum(1 for i, j in product(range(n + 1), repeat=2) if i + j <= n)


def test_d_count_examples():
    assert d_count(3, 3) == 9
    assert d_count(4, 1) == 5
    assert d_count(2, 7) == 6
    assert d_count(5, 0) == 0


def test_d_count_rejects_negative():
    with pytest.raises(ValueError):
        d_count(-1, 2)


def test_d_tilde_examples():
    assert d_tilde(4, 4) == 14
    assert d_tilde(2, 7) == 0
    assert d_tilde(3, 3) == 9


@given(small, small)
def test_d_tilde_correction(n, k):
    assert d_tilde(n, k) == d_count(n, k) - dim_pi(k - n - 3)


@given(small, small)
def test_d_linear_in_k_until_saturation(n, k):
    if k <= n + 2:
        assert d_count(n, k) == k * (2 * n + 3 - k) // 2
    else:
        assert d_count(n, k) == dim_pi(n)


def test_rect_slice_examples():
    assert len(rect_slice(2, 3, 6).points) == 6
    pts = rect_slice(3, 3, 3).points
    assert len(pts) == 8 and (2, 2) not in pts
    assert rect_slice(1, 1, 0).points == {(0, 0)}


def test_hilbert_count_examples():
    assert hilbert_count(2, 3, 6) == 6
    assert hilbert_count(3, 3, 3) == 8
    assert hilbert_count(1, 1, 0) == 1


@given(small, small, small)
def test_hilbert_count_matches_enumeration(k, m, n):
    brute = sum(1 for i in range(k) for j in range(m) if i + j <= n)
    assert hilbert_count(k, m, n) == brute == len(rect_slice(k, m, n).points)


@given(small, small, small)
def test_hilbert_symmetric(k, m, n):
    assert hilbert_count(k, m, n) == hilbert_count(m, k, n)


def test_triangular_lattice():
    T = triangular_lattice(3, 1, 2)
    assert len(T.points) == len(T) == 10
    assert min(T.points) == (1, 2)
    with pytest.raises(ValueError):
        triangular_lattice(-1)


def test_triple_examples():
    for args, value in (((2, 1, 1, 1), 0), ((3, 1, 2, 3), 1), ((1, 1, 1, 1), 0)):
        ex = triple_sigma_expressions(*args)
        assert ex.agree and set(ex.values()) == {value}


def test_triple_marks_violating_pairs():
    ex = triple_sigma_expressions(3, 3, 3, 2)
    assert ex.v is None
    assert ex.violating_pairs == ((1, 2),)
    assert ex.agree


def test_triple_rejects_low_sigma():
    assert sigma(4, 1, 1, 1) == -3
    with pytest.raises(ValueError):
        triple_sigma_expressions(4, 1, 1, 1)


def test_triple_expressions_agree_exhaustively():
    for n in range(9):
        for ks in product(range(n + 1), repeat=3):
            if sigma(n, *ks) >= -1:
                assert triple_sigma_expressions(n, *ks).agree, (n, ks)
