from __future__ import annotations

from fractions import Fraction

import pytest

from app.errors import ParseError, RingError
from app.modular import kronecker
from app.rings import GAUSSIAN, QQ, ZZ, CyclotomicInteger, ring_by_name


def test_kronecker_symbols():
    assert [kronecker(-4, n) for n in (1, 2, 3, 5, -1)] == [1, 0, -1, 1, -1]
    assert kronecker(12, 5) == -1
    assert kronecker(12, 1) == 1


def test_gaussian_unit_squares_to_minus_one():
    i = GAUSSIAN.root_of_unity(1, 4)
    assert i * i == -1
    assert GAUSSIAN.divide_exact(GAUSSIAN.coerce(3), i) == i * -3


def test_integer_roots_of_unity():
    assert ZZ.root_of_unity(1, 2) == -1
    assert ZZ.root_of_unity(2, 2) == 1
    with pytest.raises(RingError):
        ZZ.root_of_unity(1, 4)


def test_rational_part_of_cyclotomic_sum():
    total = CyclotomicInteger.root(3, 1) + CyclotomicInteger.root(3, 2) + 10
    assert total.rational_part() == 9


def test_ring_lookup_and_formatting():
    assert ring_by_name('ZZ') is ZZ
    assert ring_by_name('Z[zeta4]') == GAUSSIAN
    assert QQ.format(Fraction(3, 4)) == '3/4'
    assert QQ.parse('-1/24') == Fraction(-1, 24)
    with pytest.raises(ParseError):
        ring_by_name('GF(7)')


def test_integer_ring_rejects_fractions():
    with pytest.raises(RingError):
        ZZ.coerce(Fraction(1, 2))
