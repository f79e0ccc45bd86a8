import pytest
from hypothesis import given, settings

from fresnelkit import linalg
from fresnelkit.dyadic import (
    ENI2T,
    I,
    I2T,
    VENI2,
    Dyadic,
    E,
    F,
    Space,
    apply,
    compose,
    compound,
    compound_by_wedge,
    dot,
    dot_elements,
    double_contract,
    double_contract_left,
    dyad,
    hook_left,
    hook_right,
    inverse,
    modified,
    modified_inverse,
    trace,
    transpose,
    unmodified,
    wedge_left,
)
from fresnelkit.errors import NoInverse, SpaceMismatch
from fresnelkit.exterior import E_N, EPS_N, wedge

from strategies import dyadics, forms, media, modified_media, vectors

S = [list(r) for r in ENI2T.matrix]


def test_complement_matrices():
    assert ENI2T.matrix == VENI2.matrix
    assert [S[i][5 - i] for i in range(6)] == [1, -1, 1, 1, -1, 1]
    assert linalg.matmul(S, S) == linalg.identity(6)
    assert linalg.transpose(S) == S


def test_spaces_and_composition_rules():
    assert str(E(2)) == "E2" and F(2).dual() == E(2)
    with pytest.raises(SpaceMismatch):
        compose(ENI2T, ENI2T)
    with pytest.raises(SpaceMismatch):
        I2T + ENI2T
    assert compose(ENI2T, VENI2).spaces() == "E2F2"


@given(dyadics(E(1), F(1)), dyadics(E(1), F(1)))
def test_compound_is_multiplicative(a, b):
    for p in (2, 3):
        assert compound(compose(a, b), p) == compose(compound(a, p), compound(b, p))


@given(dyadics(E(1), F(1)))
def test_compound_routes_agree(a):
    for p in (2, 3, 4):
        assert compound(a, p) == compound_by_wedge(a, p)
    assert compound(a, 4).matrix[0][0] == linalg.det(a.matrix)


@given(dyadics(E(1), F(1)), vectors(1), vectors(1))
def test_compound_acts_on_wedges(a, x, y):
    assert apply(compound(a, 2), wedge(x, y)) == wedge(apply(a, x), apply(a, y))


@given(media())
def test_modified_roundtrip(m):
    assert unmodified(modified(m)) == m
    assert modified(m).spaces() == "E2E2"


@settings(max_examples=40)
@given(media())
def test_modified_inverse_commutes(m):
    try:
        n = inverse(m)
    except NoInverse:
        return
    assert modified(n) == modified_inverse(modified(m))
    assert compose(m, n) == I2T and compose(n, m) == I2T


@given(media(), forms(1))
def test_double_contraction_routes(m, nu):
    mm = modified(m)
    hook_route = hook_left(E_N, wedge_left(nu, hook_right(m, nu)))
    assert double_contract(mm, nu) == hook_route
    assert double_contract_left(nu, mm) == double_contract(mm, nu)


@given(modified_media(), modified_media())
def test_dot_product_symmetry(a, b):
    assert transpose(dot(a, b)) == dot(transpose(b), transpose(a))


@given(vectors(2), vectors(2))
def test_dot_elements_is_wedge_pairing(a, b):
    assert dot_elements(a, b) == dot_elements(b, a)
    assert dot_elements(a, b) == wedge(a, b).coords[0]


def test_trace_and_units():
    assert trace(I) == 4 and trace(I2T) == 6
    assert transpose(I2T).spaces() == "E2F2"
    with pytest.raises(SpaceMismatch):
        trace(ENI2T)


@given(forms(2), vectors(2))
def test_dyad_application(phi, c):
    d = dyad(phi, c)
    assert d.spaces() == "F2E2"
    assert apply(d, EPS_N.__class__(2, (1, 0, 0, 0, 0, 0))) == phi * c.coords[0]


def test_dyadic_shape_validation():
    with pytest.raises(SpaceMismatch):
        Dyadic(E(1), F(1), [[1, 2]])
    assert Space("vector", 2).dim == 6
