import pytest

from qaffine.freealg import (
    ALPHA0,
    ALPHA1,
    DELTA,
    MINUS,
    PLUS,
    Weight,
    alpha,
    qbracket,
    qint,
    verify_relation,
    word_weight,
)


def test_qint(alg):
    ctx = alg.ctx
    q = ctx.q
    assert (qint(ctx, 1) - ctx.one).is_zero()
    assert (qint(ctx, 2) - (q + 1 / q)).is_zero()
    assert (qint(ctx, 3) - (q**2 + 1 + q**-2)).is_zero()


def test_weights():
    assert alpha(0) == ALPHA0
    assert alpha(1) == ALPHA1
    assert ALPHA0 + ALPHA1 == DELTA
    assert DELTA.scale(2) + ALPHA1 == Weight(2, 3)
    assert word_weight((0, 1, 1)) == Weight(1, 2)


def test_serre_relations_hold(alg):
    # the rewriting system absorbs the degree-4 Serre elements: the
    # straightened cubic commutator combinations vanish identically
    for side in (PLUS, MINUS):
        for i in (0, 1):
            ei = alg.generator(side, i)
            ej = alg.generator(side, 1 - i)
            elem = qbracket(ei, qbracket(ei, qbracket(ei, ej)))
            assert elem.is_zero()


def test_root_vector_weights(alg):
    for n in (0, 1, 2):
        assert word_weight(next(iter(alg.root_vector(PLUS, "real1", n).terms))) \
            == DELTA.scale(n) + ALPHA1
        assert word_weight(next(iter(alg.root_vector(PLUS, "real0", n).terms))) \
            == DELTA.scale(n) + ALPHA0
    for n in (1, 2):
        assert word_weight(next(iter(alg.root_vector(PLUS, "imaginary", n).terms))) \
            == DELTA.scale(n)


def test_tilde_root_matches_low_order(alg):
    # Etilde_1 = E_delta by construction of the triangular recursion
    diff = alg.tilde_root(PLUS, 1) - alg.root_vector(PLUS, "imaginary", 1)
    assert diff.is_zero()


def test_imaginary_roots_commute_small(alg):
    for side in (PLUS, MINUS):
        for x, y in ((1, 1), (1, 2), (2, 1), (2, 2)):
            ex = alg.root_vector(side, "imaginary", x)
            ey = alg.root_vector(side, "imaginary", y)
            assert qbracket(ex, ey, side).is_zero()


@pytest.mark.parametrize("name", ["EQ1", "EQ3", "FQ1", "FQ3"])
def test_real_bracket_identities_base(alg, name):
    ok, residual = verify_relation(name, alg, n=0)
    assert ok, residual


@pytest.mark.parametrize("name,params", [
    ("EQ2", {"n": 0, "r": 2}),
    ("EQ4", {"n": 0, "r": 2}),
    ("EQ5", {"n": 0, "r": 1}),
    ("EQ6", {"n": 0, "r": 1}),
    ("EQ7", {"x": 1, "y": 1}),
    ("EQ8", {"x": 0, "y": 0}),
    ("EQ9", {"n": 0, "k": 1}),
    ("EQ10", {"n": 0, "k": 1}),
    ("FQ2", {"n": 0, "r": 2}),
    ("FQ7", {"x": 1, "y": 2}),
    ("FQ9", {"n": 1, "k": 1}),
])
def test_bracket_identities_spot(alg, name, params):
    ok, residual = verify_relation(name, alg, **params)
    assert ok, residual


def test_unknown_relation_rejected(alg):
    with pytest.raises((KeyError, ValueError)):
        verify_relation("EQ99", alg)
