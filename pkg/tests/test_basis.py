from __future__ import annotations

import pytest

from app.errors import DivisibilityError, IdentityError, PrecisionError, ValidationError
from app.jacobi.basis import (basis_matrix, basis_psi, decompose, divide_by_xi06, form_from_q0, genus_basis,
                              halfint_factor, linear_coefficient, psi2_variantA, psi2_variantB)
from app.jacobi.forms import evaluate, generator
from app.jacobi.polynomial import GeneratorPolynomial
from app.mappings import GENERATOR_POLYS


def test_psi2_variants():
    assert psi2_variantA(48).q0() == {8: 1, 0: 22, -8: 1}
    assert psi2_variantB(48).q0() == {8: 1, 4: -4, 0: 6, -4: -4, -8: 1}


@pytest.mark.parametrize('m', [2, 3, 4, 5, 6, 7])
def test_second_basis_form_is_psi2_row(m):
    assert basis_psi(m, 2, 48).q0() == {8: 1, 4: -4, 0: 6, -4: -4, -8: 1}


def test_index5_linear_form():
    assert basis_psi(5, 1, 48).q0() == {4: 5, 0: 2, -4: 5}
    assert linear_coefficient(5) == 5
    assert linear_coefficient(8) == 2


def test_top_forms_are_monic():
    for n in range(3, 8):
        q0 = basis_psi(8, n, 48).q0()
        assert max(q0) == 4 * n
        assert q0[4 * n] == 1
        assert all(not q0.get(4 * k, 0) for k in range(2, n))


def test_basis_matrix_shape():
    rows = basis_matrix(4)
    assert len(rows) == 4
    assert all(len(row) == 9 for row in rows)


def test_genus_basis_index3():
    assert genus_basis(3, 3, 48).q0() == {12: 1, 0: 34, -12: 1}
    assert genus_basis(3, 2, 48).q0() == {8: 1, 4: -1, 0: 12, -4: -1, -8: 1}


def test_form_from_q0(phi01):
    assert form_from_q0(1, {4: 1, 0: 10, -4: 1}, 72).agrees_with(phi01)
    with pytest.raises(IdentityError):
        form_from_q0(2, {4: 1, 0: 1, -4: 1}, 48)
    with pytest.raises(DivisibilityError):
        form_from_q0(5, {4: 1, 0: 10, -4: 1}, 48)


def test_decompose_recovers_generator_polynomial():
    poly = GeneratorPolynomial.parse('Phi1*Phi3 - 2*Phi2^2 + Phi4')
    form = evaluate(poly, 48)
    assert decompose(form).normal_form() == poly.normal_form()


def test_decompose_requires_precision():
    with pytest.raises(PrecisionError):
        decompose(generator('phi01', 24))


def test_halfint_factor(phi01):
    phi032, phim112 = generator('phi032', 72), generator('phim112', 72)
    assert halfint_factor(phi032 * phi01).agrees_with(phi01)
    assert halfint_factor(phim112 * phi01).agrees_with(phi01)
    with pytest.raises(ValidationError):
        halfint_factor(phi01)


def test_divide_by_xi06(phi01):
    product = generator('xi06', 72) * phi01
    assert product.q0() == {}
    assert divide_by_xi06(product).agrees_with(phi01)
    with pytest.raises(ValidationError):
        divide_by_xi06(phi01)


def test_decompose_with_xi06_term():
    poly = GeneratorPolynomial.parse(f"({GENERATOR_POLYS['xi06']})*Phi1 + Phi1^7 - 3*Phi3*Phi4")
    form = evaluate(poly, 96)
    found = decompose(form)
    assert found.normal_form() == poly.normal_form()
    assert evaluate(found, 96).agrees_with(form)
