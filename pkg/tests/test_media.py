import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fresnelkit import linalg
from fresnelkit.dyadic import ENI2T, I, I2T, Dyadic, E, F, compose, modified, trace, transpose
from fresnelkit.errors import NoInverse, PreconditionError, SpaceMismatch
from fresnelkit.exterior import EPS_N, MultiForm, MultiVector, pair, wedge
from fresnelkit.media import (
    Axion,
    Case1,
    Case2General,
    QAntisym,
    Raw,
    SkewonAxion,
    affine_transform,
    affine_transform_recipe,
    decompose_hehl_obukhov,
    invert_case1,
    invert_case1_recipe,
    random_dyadic,
    random_recipe,
    recipe_params,
)

from strategies import media, vectors

seeds = st.integers(0, 10 ** 6)


def test_axion_one_is_unit():
    assert Axion(1).build() == I2T


@settings(max_examples=30)
@given(seeds)
def test_case2_general_is_p_axion(seed):
    r = random_recipe("case2", random.Random(seed))
    p = r.as_p_axion()
    assert p.build() == r.build()
    assert p.P == r.B + I * Fraction(r.b, r.a) and p.scale == r.a
    assert p.alpha == r.c - Fraction(r.b) ** 2 / r.a


def test_case2_with_a_zero_is_skewon_axion():
    b = random_dyadic(random.Random(1), E(1), F(1))
    assert Case2General(b, 0, 2, 5).build() == SkewonAxion(b * 2, 5).build()
    with pytest.raises(PreconditionError):
        Case2General(b, 0, 2, 5).as_p_axion()


@given(vectors(2), st.integers(1, 5))
def test_q_antisym_expansion(a, scale):
    r = QAntisym(a, scale)
    assert modified(r.build()) == r.expanded_modified()
    assert transpose(r.Q) == r.Q * -1


@given(seeds)
def test_q_medium_modified_form(seed):
    r = random_recipe("q-medium", random.Random(seed))
    assert modified(r.build()) == r.modified()


def test_decomposition_of_unit():
    ho = decompose_hehl_obukhov(I2T)
    assert ho.principal.is_zero() and ho.skewon.is_zero() and ho.axion_scalar == 1


@given(media())
def test_decomposition_parts(m):
    ho = decompose_hehl_obukhov(m)
    assert ho.total() == m
    pm, sm = modified(ho.principal), modified(ho.skewon)
    assert transpose(pm) == pm and trace(ho.principal) == 0
    assert transpose(sm) == sm * -1
    again = decompose_hehl_obukhov(ho.principal)
    assert again.principal == ho.principal and again.skewon.is_zero() and again.axion_scalar == 0


@given(seeds)
def test_skewon_axion_has_no_principal_part(seed):
    r = random_recipe("skewon-axion", random.Random(seed))
    ho = decompose_hehl_obukhov(r.build())
    assert ho.principal.is_zero()
    assert ho.axion_scalar == r.alpha + Fraction(trace(r.B), 2)
    assert trace(r.build()) == 3 * trace(r.B) + 6 * r.alpha


def test_skewon_axion_trace_with_traceless_b():
    b = random_recipe("skewon", random.Random(4)).B
    assert trace(b) == 0
    assert trace(SkewonAxion(b, 7).build()) == 42


def test_p_scalar():
    r = random_recipe("p-medium", random.Random(8))
    assert r.p_scalar == r.scale ** 2 * linalg.det(r.P.matrix)


@settings(max_examples=50)
@given(seeds)
def test_case1_inverse_composes_to_unit(seed):
    r = random_recipe("case1", random.Random(seed))
    try:
        inv = invert_case1_recipe(r)
    except NoInverse as exc:
        assert exc.determinant == 0
        assert linalg.det(r.build().matrix) == 0
        return
    except PreconditionError:
        return
    assert compose(r.build(), inv.build()) == I2T
    assert inv.alpha == Fraction(1, r.alpha)


def test_case1_inverse_special_cases():
    pi, lam = MultiForm.basis(1, 2) + MultiForm.basis(3, 4), MultiForm.basis(1, 3)
    zero = MultiVector.zero(2)
    pure = invert_case1(pi, lam, zero, zero, 4)
    assert pure.C.is_zero() and pure.D.is_zero() and pure.alpha == Fraction(1, 4)
    c = MultiVector.basis(1, 2) * 3 + MultiVector.basis(2, 4)
    res = invert_case1(pi, lam, c, zero, 2)
    assert res.C == c * Fraction(-1, 2 * (pair(pi, c) + 2))
    assert compose(Case1(pi, lam, c, zero, 2).build(), Case1(pi, lam, res.C, res.D, res.alpha).build()) == I2T
    with pytest.raises(PreconditionError):
        invert_case1(pi, lam, c, c, 0)
    with pytest.raises(PreconditionError):
        invert_case1(pi, pi * 2, c, MultiVector.basis(3, 4), 1)
    with pytest.raises(NoInverse) as info:
        invert_case1(MultiForm.basis(1, 2), lam, MultiVector.basis(1, 2) * -1, MultiVector.basis(3, 4), 1)
    assert info.value.determinant == 0


def test_affine_identity():
    m = random_recipe("raw", random.Random(0)).build()
    assert affine_transform(m, I) == m
    with pytest.raises(PreconditionError):
        affine_transform(m, Dyadic(E(1), F(1), [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["case1", "case2", "skewon-axion", "p-axion", "axion"]), seeds)
def test_affine_parameter_maps(kind, seed):
    rng = random.Random(seed)
    r = random_recipe(kind, rng)
    a = random_dyadic(rng, E(1), F(1), 2, full_rank=True)
    assert affine_transform_recipe(r, a).build() == affine_transform(r.build(), a)


def test_shape_errors():
    with pytest.raises(SpaceMismatch):
        SkewonAxion(I2T, 1)
    with pytest.raises(SpaceMismatch):
        Case1(MultiVector.basis(1, 2), MultiForm.basis(1, 2), MultiVector.basis(1, 2), MultiVector.basis(1, 2), 1)
    with pytest.raises(SpaceMismatch):
        Raw([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        random_recipe("nope", random.Random(0))


def test_generators_honor_their_constraints():
    rng = random.Random(9)
    for _ in range(5):
        sp = random_recipe("special-p-axion", rng)
        assert sp.p_scalar == sp.alpha ** 2 and sp.alpha != 0
        qa = random_recipe("q-antisym", rng)
        assert pair(EPS_N, wedge(qa.A, qa.A)) != 0
        sk = random_recipe("skewon", rng)
        assert trace(sk.B) == 0 and sk.alpha == 0
    assert set(recipe_params(Axion(2))) == {"alpha"}
    assert Raw(ENI2T.matrix).build().spaces() == "F2E2"
