import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qaffine.matrices import SparseMat, embed, kron


small_fracs = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4)


def mats(n):
    return st.dictionaries(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        small_fracs, max_size=n * n).map(
        lambda d: SparseMat(n, n, {k: v for k, v in d.items() if v != 0}))


def test_identity_and_unit():
    I = SparseMat.identity(3, Fraction(1))
    E = SparseMat.unit(3, 3, 0, 2, Fraction(5))
    assert (I * E - E).is_zero()
    assert (E * I - E).is_zero()
    assert E[0, 2] == Fraction(5)
    assert E[1, 1] == 0 or E[1, 1] == Fraction(0)


def test_shape_mismatch_rejected():
    A = SparseMat.identity(2, Fraction(1))
    B = SparseMat.identity(3, Fraction(1))
    with pytest.raises(ValueError):
        A * B
    with pytest.raises(ValueError):
        A + B


def test_power():
    A = SparseMat.from_entries(2, 2, [(0, 0, Fraction(2)), (0, 1, Fraction(1)),
                                      (1, 1, Fraction(2))])
    A3 = A ** 3
    assert A3[0, 0] == Fraction(8)
    assert A3[0, 1] == Fraction(12)
    assert (A ** 0 - SparseMat.identity(2, Fraction(1))).is_zero()


@settings(max_examples=40, deadline=None)
@given(mats(3), mats(3), mats(3))
def test_matrix_ring_axioms(A, B, C):
    assert ((A + B) * C - (A * C + B * C)).is_zero()
    assert (A * (B * C) - (A * B) * C).is_zero()
    assert (A - A).is_zero()


@settings(max_examples=30, deadline=None)
@given(mats(2), mats(2), mats(2), mats(2))
def test_kron_multiplicative(A, B, C, D):
    assert (kron(A, C) * kron(B, D) - kron(A * B, C * D)).is_zero()


@settings(max_examples=30, deadline=None)
@given(mats(2), mats(2))
def test_embed_respects_products(A, B):
    for slot in (12, 13, 23, 21):
        lhs = embed(A, slot, 3, 2) * embed(B, slot, 3, 2)
        assert (lhs - embed(A * B, slot, 3, 2)).is_zero()


@settings(max_examples=30, deadline=None)
@given(mats(2), mats(2))
def test_embed_disjoint_legs_commute(A, B):
    # operators acting on legs (1,2) and on leg 3 alone commute
    C = embed(kron(A, B), 12, 3, 2)
    I4 = SparseMat.identity(4, Fraction(1))
    D = kron(I4, A)
    assert (C * D - D * C).is_zero()


def test_transpose():
    A = SparseMat.from_entries(2, 3, [(0, 2, Fraction(7)), (1, 0, Fraction(-1))])
    T = A.transpose()
    assert T.rows == 3 and T.cols == 2
    assert T[2, 0] == Fraction(7)
    assert T[0, 1] == Fraction(-1)


def test_to_json_schema():
    A = SparseMat.from_entries(2, 2, [(0, 1, Fraction(1, 2))])
    doc = json.loads(A.to_json())
    assert doc["rows"] == 2 and doc["cols"] == 2
    assert doc["entries"] == [[0, 1, "1/2"]]
