import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qaffine.matrices import SparseMat, embed
from qaffine.rep import RepConfig
from qaffine import rmatrix as rm


@pytest.fixture(scope="module")
def cfg1():
    return RepConfig(1)


@pytest.fixture(scope="module")
def cfg2():
    return RepConfig(2)


# -- the scalar series --------------------------------------------------------


def test_a_series_low_order(ctx1):
    q = ctx1.q
    A = rm.a_series(3, ctx1)
    assert A.coeffs[0].is_one()
    expected1 = -(q**2 - 1) / (q**2 + 1)
    assert (A.coeffs[1] - expected1).is_zero()


def test_a_series_functional_small_direct(ctx1):
    assert rm.a_series_functional_check(5, ctx1)


def test_packed_numerators_match_direct_series(ctx1):
    K = 8
    A = rm.a_series(K, ctx1)
    B, P = rm._a_numerators_packed(K)
    q = ctx1.q
    half = 1 << (B - 1)
    for k in range(K + 1):
        x, coeffs = P[k], []
        while x:
            d = x & ((1 << B) - 1)
            if d >= half:
                d -= 1 << B
            coeffs.append(d)
            x = (x - d) >> B
        val = ctx1.zero
        for deg, c in enumerate(coeffs):
            val = val + ctx1.scalar(c) * q ** (2 * deg)
        den = ctx1.scalar(math.factorial(k))
        for i in range(1, k + 1):
            den = den * (q ** (2 * i) + 1) ** (k // i)
        assert (val / den - A.coeffs[k]).is_zero(), k


def test_functional_check_order_30():
    assert rm.a_series_functional_check(30)


def test_a_numeric_satisfies_functional_equation():
    q = 0.7
    for z in (0.1 + 0.2j, -0.3j, 0.25):
        lhs = rm.a_numeric(z, q) * rm.a_numeric(q**2 * z, q)
        rhs = (1 - q**2 * z) / (1 - z)
        assert abs(lhs - rhs) < 1e-12


# -- atoms -------------------------------------------------------------------


def test_atom_substitution_is_multiplicative(ctx2):
    b, c = ctx2.gen("b1"), ctx2.gen("c1")
    vals = [b + c, b - c]
    x = rm.AtomEntry.atom(2, 0, ctx2.q) + rm.AtomEntry.rational(2, ctx2.gen("z"))
    y = rm.AtomEntry.atom(2, 1, ctx2.one, exponent=-1)
    lhs = (x * y).substitute(vals)
    rhs = x.substitute(vals) * y.substitute(vals)
    assert (lhs - rhs).is_zero()


def test_reduced_atom_functional_equation(cfg1):
    # A(q^2 z) = (1 - q^2 z)/(1 - z) A(z)^{-1}: reducing the j = 1 atom
    # and multiplying back by the j = 0 atom recovers the rational factor
    ctx = cfg1.ctx
    q, z = ctx.q, ctx.gen("z")
    red = rm.reduced_atom(cfg1, 1, 0)
    prod = red * rm.AtomEntry.atom(1, 0, ctx.one)
    expected = rm.AtomEntry.rational(1, (1 - q**2 * z) / (1 - z))
    assert (prod - expected).is_zero()


def test_render_atom_entry(cfg1):
    ctx = cfg1.ctx
    entry = rm.AtomEntry.atom(1, 0, ctx.one) + rm.AtomEntry.rational(1, ctx.q)
    text = rm.render_atom_entry(entry)
    assert "A[0]" in text and "+" in text


# -- assembled matrices --------------------------------------------------------


def test_six_vertex_transcription(cfg1):
    mat = rm.assemble_R(cfg1, mode="atoms")
    stripped = rm.strip_common_atom(mat)
    expected = rm.six_vertex_R(cfg1.ctx).scaled(1 / cfg1.ctx.gen("s"))
    assert stripped == expected


def test_n2_transcription(cfg2):
    mat = rm.assemble_R(cfg2, mode="atoms")
    assert rm.r2_diff(cfg2, mat) == []


def test_series_consistency_n1(cfg1):
    assert rm.series_factorization_check(cfg1, order=4)


def test_ybe_exact_n1():
    assert rm.ybe_n1_exact()


def test_ybe_exact_n1_scalar_prefactor_invariance(ctx1):
    # rescaling each factor by arbitrary nonzero rational functions moves
    # both triple products by the same overall factor
    ctx = ctx1
    z, w, s = ctx.gen("z"), ctx.gen("w"), ctx.gen("s")
    rng = random.Random(7)
    sigmas = []
    for _ in range(3):
        n1, n2 = rng.randint(1, 5), rng.randint(-4, 4)
        sigmas.append((s ** n2 * (z + n1)) / (w**2 + 1))
    Rz = rm.six_vertex_R(ctx, z).scaled(sigmas[0])
    Rzw = rm.six_vertex_R(ctx, z * w).scaled(sigmas[1])
    Rw = rm.six_vertex_R(ctx, w).scaled(sigmas[2])
    ok, _ = rm.check_ybe_exact(Rz, Rzw, Rw)
    assert ok


def test_cartan_factor_diagonal(cfg2):
    mat = rm.r_cartan(cfg2)
    assert all(i == j for i, j in mat.data)


def test_alpha_factors_nilpotent_parts(cfg2):
    # the off-identity part of each real-root factor squares to zero
    ident = SparseMat.identity(16, cfg2.ctx.one)
    for i in (0, 1):
        Npart = rm.r_factor_alpha(i, cfg2) - ident
        assert (Npart * Npart).is_zero()


# -- numerics ------------------------------------------------------------------


def test_numeric_r_matches_exact_n1():
    q, z = 0.8, 0.11 + 0.07j
    cfg = RepConfig(1)
    ctx = cfg.ctx
    exact = rm.six_vertex_R(ctx, ctx.gen("z"))
    R = rm.numeric_R(1, q, z)
    scale = rm.a_numeric(z, q) * q ** -0.5
    for i in range(4):
        for j in range(4):
            want = exact.entry(i, j)
            val = complex(0) if want is None else want.eval_numeric(
                {"s": q ** 0.5, "z": z})
            assert abs(R[i, j] - scale * val) < 1e-10, (i, j)


def test_numeric_ybe_residuals():
    pts = rm.random_spectral_points(0.8, 4)
    for N in (1, 2, 3):
        for z, w in pts:
            assert rm.numeric_ybe_residual(N, 0.8, z, w) <= 1e-9


def test_random_spectral_points_satisfy_disks():
    q = 0.8
    pts = rm.random_spectral_points(q, 10)
    assert len(pts) == 10
    for z, w in pts:
        for u in (z, w, z * w, z * q**2, w * q**2, z * w * q**2,
                  z / q**2, w / q**2, z * w / q**2):
            assert abs(u) < 1


def test_random_spectral_points_deterministic():
    assert rm.random_spectral_points(0.8, 5) == rm.random_spectral_points(0.8, 5)


# -- the Cartan canonical element ----------------------------------------------


def test_cartan_universal_spot():
    assert rm.cartan_universal_check(3, 2, (1, 1, 0, 1, 1, 0))
    assert rm.cartan_universal_check(1, 1, (0, 0, 1, 2, 1, 2))
    assert rm.cartan_universal_check(5, 3, (2, 1, 1, 0, 2, 1))


@settings(max_examples=25, deadline=None)
@given(st.tuples(*(st.integers(0, 4) for _ in range(6))))
def test_cartan_universal_wider_characters(chars):
    assert rm.cartan_universal_check(3, 2, chars)
