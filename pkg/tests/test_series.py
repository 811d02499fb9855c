from __future__ import annotations

import pytest

from app.errors import DivisibilityError, PrecisionError, RingError
from app.jacobi.forms import generator
from app.rings import GAUSSIAN
from app.series import (Series, Series2, Series3, product_expand, render_rows, series_exact_div,
                        series_pow, shift_half_omega, substitute_y)


def test_multiplication_of_laurent_polynomials():
    plus = Series2({(0, 0): 1, (0, 4): 1})
    minus = Series2({(0, 0): 1, (0, 4): -1})
    assert (plus * minus).terms == {(0, 0): 1, (0, 8): -1}


def test_exact_division_and_remainder():
    numerator = Series2({(0, 0): 1, (0, 8): -1})
    denominator = Series2({(0, 0): 1, (0, 4): -1})
    assert series_exact_div(numerator, denominator).terms == {(0, 0): 1, (0, 4): 1}
    with pytest.raises(DivisibilityError):
        series_exact_div(Series2({(0, 0): 1, (0, 8): 1}), denominator)


def test_geometric_series_from_product():
    inverse = product_expand([((24, 0), -1)], 120, arity=2)
    assert inverse.terms == {(24 * k, 0): 1 for k in range(5)}
    assert inverse.qprec == 120
    one_minus_q = Series2({(0, 0): 1, (24, 0): -1}, 120)
    assert series_pow(one_minus_q, -1).agrees_with(inverse)


def test_truncation_drops_unknown_terms():
    series = Series2({(0, 0): 1, (24, 0): 5, (48, 0): 7}, 48)
    assert series.terms == {(0, 0): 1, (24, 0): 5}
    assert series.truncate(24).terms == {(0, 0): 1}


def test_substitute_y_scales_exponents():
    assert substitute_y(Series2({(0, 4): 2}), 3).terms == {(0, 12): 2}


def test_half_shift_of_omega_needs_gaussian_ring():
    monomial = Series3({(0, 0, 12): 1})
    with pytest.raises(RingError):
        shift_half_omega(monomial)
    shifted = shift_half_omega(monomial.to_ring(GAUSSIAN))
    assert shifted.coeff((0, 0, 12)) == GAUSSIAN.root_of_unity(1, 4)


def test_json_payload_restores_series():
    series = generator('phi01', 48).series
    payload = series.to_json()
    assert payload['den'] == [24, 4]
    assert Series.from_json(payload) == series


def test_rows_render_like_printed_expansions():
    rows = render_rows(generator('phi01', 48).series)
    assert rows[0] == 'q^0: (y^-1 + 10 + y)'
    assert rows[1] == 'q^1: (10*y^-2 - 64*y^-1 + 108 - 64*y + 10*y^2)'


@pytest.fixture
def truncated_series():
    f = Series2({(0, 0): 1, (24, 4): 3, (24, -4): -2, (48, 0): 5}, 120)
    g = Series2({(3, 2): -1, (27, -2): 4, (51, 6): 1}, 99)
    h = Series2({(0, 4): 2, (24, 0): -7, (72, -8): 1}, 120)
    return f, g, h


def test_ring_laws(truncated_series):
    f, g, h = truncated_series
    assert ((f * g) * h).agrees_with(f * (g * h))
    assert (f * (g + h)).agrees_with(f * g + f * h)
    assert (series_pow(f, -1) * f).agrees_with(Series2.one(qprec=120))
    assert (series_pow(g, -2) * g * g).agrees_with(Series2.one(qprec=96))


def test_product_over_union_of_factor_lists():
    first = [((24, 4), 1), ((24, -4), 2), ((48, 0), -3)]
    second = [((24, 0), 3), ((72, 8), -1)]
    whole = product_expand(first + second, 144, arity=2)
    assert whole.agrees_with(product_expand(first, 144, arity=2) * product_expand(second, 144, arity=2))


def test_inverse_of_exact_series_needs_precision():
    assert series_pow(Series2({(24, 4): 1}), -1).terms == {(-24, -4): 1}
    with pytest.raises(PrecisionError):
        series_pow(Series2({(0, 0): 1, (0, 4): -1}), -1)
