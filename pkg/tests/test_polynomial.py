from __future__ import annotations

import pytest

from app.errors import ParseError, ValidationError
from app.jacobi.polynomial import GeneratorPolynomial


def test_parse_expands_named_generators():
    poly = GeneratorPolynomial.parse('phi06')
    assert poly == GeneratorPolynomial.parse('Phi2*Phi4 - Phi3^2')
    assert poly.index == 6


def test_index_of_torsion_relation():
    assert GeneratorPolynomial.parse('Phi1*Phi3 - Phi2^2').index == 4


def test_normal_form_removes_mixed_monomials():
    reduced = GeneratorPolynomial.parse('Phi1*Phi3').normal_form()
    assert reduced == GeneratorPolynomial.parse('Phi2^2 + 4*Phi4')


def test_inhomogeneous_polynomial_has_no_index():
    with pytest.raises(ValidationError):
        GeneratorPolynomial.parse('Phi1 + Phi2').index


@pytest.mark.parametrize('text', ['Phi5', 'phi032', 'Phi1 / 2', 'import os'])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        GeneratorPolynomial.parse(text)


def test_exact_division_by_scalar():
    poly = GeneratorPolynomial.parse('4*Phi4 + 2*Phi2^2')
    assert poly.exact_div(2) == GeneratorPolynomial.parse('2*Phi4 + Phi2^2')
    with pytest.raises(ValidationError):
        poly.exact_div(4)
