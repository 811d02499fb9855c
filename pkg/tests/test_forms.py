from __future__ import annotations

import pytest

from app.errors import ValidationError
from app.jacobi.forms import (evaluate, form_from_expression, generator, theta_jacobi, theta_sum,
                              xi_ab)
from app.jacobi.polynomial import GeneratorPolynomial
from app.rings import QQ


@pytest.mark.parametrize('k, constant', [(1, 10), (2, 4), (3, 2), (4, 1)])
def test_generator_q0_rows(k, constant):
    phi = generator(f'phi0{k}', 48)
    assert phi.q0() == {4: 1, 0: constant, -4: 1}
    assert phi.is_symmetric()


def test_phi01_q1_row(phi01):
    assert phi01.row(24) == {-8: 10, -4: -64, 0: 108, 4: -64, 8: 10}


def test_torsion_relation(phi01):
    phi2, phi3, phi4 = (generator(f'phi0{k}', 72) for k in (2, 3, 4))
    assert (4 * phi4).agrees_with(phi01 * phi3 - phi2 ** 2)


def test_xi06_starts_at_q1():
    xi = generator('xi06', 72)
    assert xi.q0() == {}
    assert xi.coeff(24, 24) == 1
    assert xi.coeff(24, 20) == -12
    assert xi.coeff(24, 0) == 924
    poly = GeneratorPolynomial.parse('-Phi1^2*Phi4 + 9*Phi1*Phi2*Phi3 - 8*Phi2^3 - 27*Phi3^2')
    assert xi.agrees_with(evaluate(poly, 72))


def test_half_integral_generators():
    assert generator('phi032', 48).q0() == {2: 1, -2: 1}
    assert generator('phim112', 48).q0() == {2: 1, -2: -1}
    assert generator('phi032', 48).index2 == 3


def test_theta_product_equals_theta_sum():
    assert theta_jacobi(96).agrees_with(theta_sum(96))


def test_xi_triple_product():
    product = xi_ab(0, 0, 72) * xi_ab(1, 0, 72) * xi_ab(0, 1, 72)
    assert product.scale(4).agrees_with(generator('phi032', 72).series.scale(2).to_ring(QQ))


def test_form_from_expression_accepts_names_and_polynomials(phi01):
    assert form_from_expression('Φ1', 72).agrees_with(phi01)
    assert form_from_expression('Phi1*Phi3 - Phi2^2', 48).q0() == {4: 4, 0: 4, -4: 4}


def test_generator_errors():
    with pytest.raises(ValidationError):
        generator('phi05', 48)
    with pytest.raises(ValidationError):
        generator('phi01', 12)


def test_adding_forms_of_different_index(phi01):
    with pytest.raises(ValidationError):
        phi01 + generator('phi02', 72)


def test_xi_ab_builds_phi01():
    xi00 = xi_ab(0, 0, 48)
    assert xi00.coeff((0, 0)) == 1
    assert all(ly % 4 == 0 for _, ly in xi00.terms)
    assert generator('phi01', 48).q0() == {4: 1, 0: 10, -4: 1}
