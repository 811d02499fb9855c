from __future__ import annotations

import pytest

from app.errors import ValidationError
from app.jacobi.forms import generator
from app.siegel.arithmetic import (EVEN_CHARACTERISTICS, arithmetic_lift, delta11_identity_check,
                                   delta_half_substitutions, phi3_squared_check, siegel_theta_constant,
                                   theta_product_delta5_squared)
from app.siegel.lifts import exp_lift, named_lift


def test_delta2_leading_terms():
    lifted = arithmetic_lift('Delta2', 2, 2)
    assert lifted.body.coeff((6, 2, 12)) == 1
    assert lifted.body.coeff((6, -2, 12)) == -1
    assert (lifted.weight2, lifted.character_order) == (4, 4)


def test_exp_lift_matches_arithmetic_lift():
    for name in ('Delta2', 'Delta1'):
        assert named_lift(name, 2, 2).agrees_with(arithmetic_lift(name, 2, 2))


def test_unknown_arithmetic_lift():
    with pytest.raises(ValidationError):
        arithmetic_lift('Delta5', 2, 2)


def test_even_characteristics():
    assert len(EVEN_CHARACTERISTICS) == 10
    with pytest.raises(ValidationError):
        siegel_theta_constant((1, 0), (1, 0), 2)


def test_theta_product_is_delta5_squared(phi01):
    assert exp_lift(2 * phi01, 2, 2).agrees_with(theta_product_delta5_squared(2, 2))


def test_delta_half_substitution():
    assert delta_half_substitutions() == [(2, 4)]


def test_delta11_identity():
    report = delta11_identity_check()
    assert report.passed, report.failures()


def test_phi3_squared_identity():
    report = phi3_squared_check()
    assert report.passed, report.failures()


@pytest.mark.parametrize('name', ['Delta2', 'Delta1'])
def test_constructions_agree_through_cubic_orders(name):
    assert named_lift(name, 4, 4).agrees_with(arithmetic_lift(name, 4, 4))


def test_delta1_character_on_divisor_sum():
    body = arithmetic_lift('Delta1', 4, 4).body
    assert abs(body.coeff((28, 14, 84))) == 2
    assert body.coeff((28, -14, 84)) == -body.coeff((28, 14, 84))
