import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from fresnelkit import linalg
from fresnelkit.dispersion import (
    POLARIZATION_POINTS,
    QUARTIC_KEYS,
    NoWave,
    PlaneWave,
    QuarticForm,
    dispersion_dyadic,
    dispersion_dyadic_modified,
    extract_quartic,
    fresnel_scalar,
    is_dispersion_free,
    plane_wave_solve,
    quartic_of,
    rank_profile,
)
from fresnelkit.dyadic import E, Dyadic, compound, dyad, modified, modified_inverse
from fresnelkit.errors import PreconditionError, SpaceMismatch
from fresnelkit.exterior import E_N, hook, one_form, wedge
from fresnelkit.media import Axion, QMedium, random_recipe

from strategies import forms, media, modified_media, nonzero_forms, rationals


def test_polarization_points():
    assert len(POLARIZATION_POINTS) == len(set(POLARIZATION_POINTS)) == 35
    assert all(sum(p) == 4 for p in POLARIZATION_POINTS)
    assert len(QUARTIC_KEYS) == 35


@settings(max_examples=25, deadline=None)
@given(modified_media(), forms(1))
def test_extracted_quartic_reproduces_values(mm, nu):
    assert extract_quartic(mm).evaluate(nu) == fresnel_scalar(mm, nu)


@settings(max_examples=40, deadline=None)
@given(modified_media(rationals), forms(1, rationals))
def test_printed_forms_agree_and_cube_factorizes(mm, nu):
    value = fresnel_scalar(mm, nu)  # raises if the two printed forms differ
    d = dispersion_dyadic_modified(mm, nu)
    h = hook(E_N, nu)
    assert compound(d, 3) == dyad(h, h) * value


@given(media(), forms(1))
def test_dispersion_dyadic_routes(m, nu):
    assert dispersion_dyadic(m, nu) == dispersion_dyadic_modified(modified(m), nu)


@given(media(), forms(1))
def test_potential_gauge_direction_is_null(m, nu):
    assert linalg.matvec(dispersion_dyadic(m, nu).matrix, nu.coords) == [0] * 4


def test_inverse_side_quartic_scales_by_determinant():
    rng = random.Random(2)
    for _ in range(3):
        mm = modified(random_recipe("raw", rng).build())
        det = linalg.det(mm.matrix)
        if det == 0:
            continue
        qm, qn = extract_quartic(mm), extract_quartic(modified_inverse(mm))
        assert qn.proportionality(qm) == Fraction(1, det)


def test_lorentz_q_medium_quartic():
    q = Dyadic(E(1), E(1), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]])
    got = quartic_of(QMedium(q, 1).build())
    # -(ν1² + ν2² + ν3² - ν4²)²
    expected = {}
    sq = {(0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): -1}
    for a, ca in sq.items():
        for b, cb in sq.items():
            key = tuple(sorted(a + b))
            expected[key] = expected.get(key, 0) - ca * cb
    assert got == QuarticForm.from_monomials(expected)


def test_quartic_form_api():
    q = QuarticForm.from_monomials({(0, 0, 1, 1): 6, (3, 3, 3, 3): -2})
    assert q.coeffs[(0, 0, 1, 1)] == 1
    assert q.monomials()[(0, 0, 1, 1)] == 6
    assert q.evaluate((1, 1, 0, 1)) == 4
    assert q.tensor()[1][0][1][0] == 1
    assert q.proportionality(QuarticForm.from_monomials({(0, 0, 1, 1): 3, (3, 3, 3, 3): -1})) == 2
    zero = QuarticForm.from_monomials({})
    assert zero.is_zero() and zero.proportionality(zero) == 1 and q.proportionality(zero) is None
    assert QuarticForm.key_label((0, 1, 1, 3)) == "1224"
    with pytest.raises(ValueError):
        QuarticForm({(0, 0, 0, 0): 1})


def test_axion_waves_are_unrestricted():
    m = Axion(3).build()
    assert is_dispersion_free(m)
    wave = plane_wave_solve(m, one_form(1, 2, 0, -1))
    assert isinstance(wave, PlaneWave)
    assert wave.Psi == wave.Phi * 3
    assert wedge(wave.phi, one_form(1, 2, 0, -1)) == -wave.Phi


@given(nonzero_forms())
def test_dispersion_free_medium_always_has_a_wave(nu):
    m = random_recipe("case1", random.Random(5)).build()
    wave = plane_wave_solve(m, nu)
    assert isinstance(wave, PlaneWave)
    assert wedge(nu, wave.Phi).is_zero() and wedge(nu, wave.Psi).is_zero()


def test_generic_medium_off_surface_has_no_wave():
    m = random_recipe("raw", random.Random(1)).build()
    nu = one_form(1, 2, 3, 5)
    assert fresnel_scalar(modified(m), nu) != 0
    result = plane_wave_solve(m, nu)
    assert isinstance(result, NoWave) and result.null_dimension == 1


def test_rank_profile_and_preconditions():
    m = random_recipe("skewon-axion", random.Random(3)).build()
    prof = rank_profile(m, [one_form(1, 0, 0, 0), one_form(1, 2, 3, 4)])
    assert prof.rank_le_2 and prof.max_rank <= 2
    with pytest.raises(PreconditionError):
        rank_profile(m, [])
    with pytest.raises(PreconditionError):
        plane_wave_solve(m, one_form(0, 0, 0, 0))
    with pytest.raises(SpaceMismatch):
        fresnel_scalar(m, one_form(1, 0, 0, 0))
