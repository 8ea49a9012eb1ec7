import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qaffine.cyclotomic import Cyclotomic


small_fracs = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6)


def elements(N):
    from sympy import totient
    deg = int(totient(N))
    return st.lists(small_fracs, min_size=deg, max_size=deg).map(
        lambda cs: Cyclotomic(N, cs))


def test_root_has_order_n():
    for N in (1, 2, 3, 4, 5, 6, 12):
        z = Cyclotomic.root(N, 1)
        assert z ** N == Cyclotomic.root(N, 0)
        for k in range(1, N):
            assert z ** k != Cyclotomic.root(N, 0)


def test_cyclotomic_polynomial_reduction():
    # the primitive root satisfies the cyclotomic polynomial, e.g. Phi_3
    z = Cyclotomic.root(3, 1)
    assert z * z + z + 1 == Cyclotomic(3, [])


def test_to_complex_matches_exp():
    for N in (3, 4, 5, 8):
        for k in range(N):
            approx = Cyclotomic.root(N, k).to_complex()
            assert abs(approx - cmath.exp(2j * cmath.pi * k / N)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(elements(5), elements(5), elements(5))
def test_ring_axioms_order5(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * (y * z) == (x * y) * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=40, deadline=None)
@given(elements(8))
def test_inverse_order8(x):
    if x == Cyclotomic(8, []):
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == Cyclotomic.root(8, 0)


def test_geometric_sum_of_all_roots_vanishes():
    for N in (2, 3, 4, 6):
        total = Cyclotomic(N, [])
        for k in range(N):
            total = total + Cyclotomic.root(N, k)
        assert total == Cyclotomic(N, [])
