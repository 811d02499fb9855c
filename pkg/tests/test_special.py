from __future__ import annotations

import pytest

from app.errors import PrecisionError, ValidationError
from app.genus import special_value_suite
from app.jacobi.forms import JacobiForm, generator
from app.jacobi.special import (alpha, weak_form_residuals, specialize_center, specialize_torsion,
                                taylor_coeffs)
from app.series import Series2


def test_alpha_expansion():
    a = alpha(24 * 6)
    golden = [8, 2 ** 8, 2 ** 11, 11 * 2 ** 10, 3 * 2 ** 14, 359 * 2 ** 9]
    assert [a.coeff((24 * n, 0)) for n in range(6)] == golden


def test_torsion_values_of_generators():
    assert specialize_torsion(generator('phi02', 96), 2).agrees_with(Series2.one().scale(2))
    assert specialize_torsion(generator('phi04', 96), 2).agrees_with(Series2.one().scale(-1))
    assert specialize_torsion(generator('phi03', 96), 4).coeff((0, 0)) == 2
    assert specialize_torsion(generator('phi01', 96), 3).coeff((0, 0)) == 9


def test_torsion_order_must_be_supported(phi01):
    with pytest.raises(ValidationError):
        specialize_torsion(phi01, 5)


def test_center_values():
    assert specialize_center(generator('phi02', 96)).agrees_with(Series2.one().scale(-2))
    assert specialize_center(generator('phi03', 96)).agrees_with(Series2({}))
    hat = specialize_center(generator('phi01', 96))
    assert hat.coeff((-6, 0)) == -1
    assert hat.coeff((6, 0)) == 20


def test_taylor_constant_term(phi01):
    f0 = taylor_coeffs(phi01, 1)[0]
    assert f0.terms == {(0, 0): 12}


def test_residuals_vanish_for_generators():
    for k in (1, 2, 3, 4):
        assert weak_form_residuals(generator(f'phi0{k}', 48)) == (0, 0)
    with pytest.raises(PrecisionError):
        weak_form_residuals(generator('phi01', 24))


def test_special_value_identities():
    report = special_value_suite(24 * 4)
    assert report.passed, report.failures()


@pytest.mark.parametrize('name', ['phi01', 'phi02', 'phi03', 'phi04', 'xi06'])
def test_quadratic_taylor_coefficient_vanishes(name):
    f2 = taylor_coeffs(generator(name, 96), 3)[2]
    assert f2.is_zero()


def test_xi06_vanishes_to_order_12():
    coeffs = taylor_coeffs(generator('xi06', 72), 13)
    assert all(f.is_zero() for f in coeffs[:12])
    assert coeffs[12].coeff((0, 0)) == 0
    assert coeffs[12].coeff((24, 0)) == 1


def test_residuals_detect_perturbed_form(phi01):
    perturbed = JacobiForm(0, 2, phi01.series + Series2({(0, 0): 1}, 72))
    assert weak_form_residuals(perturbed) == (1, 24)
