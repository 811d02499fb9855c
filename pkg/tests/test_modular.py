from __future__ import annotations

from fractions import Fraction

import pytest

from app.modular import EtaQuotientSpec, eta_power, eta_quotient, g2_series, theta_constant


def test_discriminant_leading_coefficients():
    delta = eta_power(24, 72)
    assert delta.coeff((24, 0)) == 1
    assert delta.coeff((48, 0)) == -24
    assert delta.coeff((0, 0)) == 0


def test_eta_quotient_matches_powers():
    spec = EtaQuotientSpec(((1, 24),))
    assert eta_quotient(spec, 96).agrees_with(eta_power(24, 96))
    assert spec.negated().leading == -24


def test_theta_constant_terms():
    assert theta_constant(0, 0, 72).terms == {(0, 0): 1, (12, 0): 2, (48, 0): 2}
    assert theta_constant(0, 1, 72).terms == {(0, 0): 1, (12, 0): -2, (48, 0): 2}
    with pytest.raises(ValueError):
        theta_constant(1, 1, 24)


def test_g2_series():
    assert g2_series(72).terms == {(0, 0): Fraction(-1, 24), (24, 0): 1, (48, 0): 3}


def test_jacobi_theta_relations():
    t00, t01, t10 = (theta_constant(a, b, 240) for a, b in ((0, 0), (0, 1), (1, 0)))
    assert (t00 ** 4).agrees_with(t01 ** 4 + t10 ** 4)
    assert (t00 * t01 * t10).agrees_with(eta_power(3, 240).scale(2))
