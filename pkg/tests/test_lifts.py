from __future__ import annotations

import pytest

from app.errors import PrecisionError, ValidationError
from app.jacobi.forms import form_from_expression, generator
from app.siegel.lifts import (HumbertDatum, abc_exponents, exp_lift, humbert_multiplicity, lift_divisor,
                              named_lift, required_qprec, scale_z)


def test_required_qprec():
    assert required_qprec(1, 2, 2) == 48
    assert required_qprec(2, 3, 3) == 24 * 3


def test_delta5_prefactor(phi01):
    lifted = exp_lift(phi01, 2, 2)
    assert lifted.prefactor == (12, 2, 12)
    assert lifted.y_factors == ((4, 1),)
    assert lifted.weight2 == 10
    assert lifted.character_order == 2
    assert lifted.index_t == 1


def test_k3_anomaly_prefactor(phi01):
    lifted = exp_lift(-2 * phi01, 2, 2)
    assert lifted.prefactor == (-24, -4, -24)
    assert lifted.y_factors == ((4, -2),)
    assert lifted.weight2 == -20
    assert lifted.character_order == 1


def test_abc_exponents(phi01):
    assert abc_exponents(2 * phi01) == (1, 1, 1)


def test_precision_error():
    with pytest.raises(PrecisionError) as info:
        exp_lift(generator('phi01', 24), 3, 3)
    assert info.value.exit_code == 4


def test_half_integral_index_rejected():
    with pytest.raises(ValidationError):
        exp_lift(generator('phi032', 48), 2, 2)


def test_scale_z():
    doubled = scale_z(generator('phi032', 72), 2)
    assert doubled.index2 == 12
    assert doubled.agrees_with(generator('phi06', 72))


def test_lift_is_multiplicative(phi01):
    phi = generator('phi02', 72)
    combined = exp_lift(phi01 + phi01, 2, 2)
    assert combined.agrees_with(exp_lift(phi01, 2, 2) ** 2)
    assert exp_lift(phi, 2, 3).agrees_with(named_lift('Delta2', 2, 3))


def test_humbert_multiplicity(phi01):
    assert humbert_multiplicity(2 * phi01, 0, 1) == -2
    assert lift_divisor(phi01) == [HumbertDatum(0, 1, 1, 1)]


def test_phi3_divisor():
    divisor = {(h.D, h.b): h.multiplicity for h in lift_divisor(scale_z(generator('phi032', 72), 2))}
    assert divisor == {(1, 1): 1, (1, 5): -1}


def test_named_lift_aliases():
    assert named_lift('Δ5', 2, 2).prefactor == (12, 2, 12)
    with pytest.raises(ValidationError):
        named_lift('Delta99', 2, 2)


def test_nonzero_weight_rejected():
    with pytest.raises(ValidationError):
        exp_lift(generator('phim112', 48), 2, 2)


@pytest.mark.parametrize('t, first, second', [(2, 'Phi2', 'Phi1^2'), (3, 'Phi3', 'Phi1*Phi2')])
def test_lift_is_homomorphism(t, first, second):
    qprec = required_qprec(t, 3, 3)
    phi, psi = (form_from_expression(expr, qprec) for expr in (first, second))
    lift_phi, lift_psi = exp_lift(phi, 3, 3), exp_lift(psi, 3, 3)
    for a in range(-2, 3):
        for b in range(-2, 3):
            if a or b:
                combined = exp_lift(a * phi + b * psi, 3, 3)
                assert combined.agrees_with(lift_phi ** a * lift_psi ** b), (a, b)
