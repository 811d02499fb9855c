from __future__ import annotations

import pytest

from app.errors import ValidationError
from app.jacobi.basis import genus_basis, psi2_variantA
from app.jacobi.forms import generator
from app.jacobi.hecke import hecke_T0_2, hecke_Tminus, integral_orders, norm_table


def test_integral_orders():
    assert integral_orders(24) == 1
    assert integral_orders(25) == 2
    assert integral_orders(72) == 3


def test_tminus2_identity(phi01):
    image = hecke_Tminus(phi01, 2)
    assert image.index2 == 4
    assert image.qprec == 48
    assert (image - 2 * generator('phi02', 48)).agrees_with(psi2_variantA(48))


def test_tminus3_gives_top_index3_form():
    image = hecke_Tminus(generator('phi01', 120), 3)
    assert (image - 3 * generator('phi03', 72)).agrees_with(genus_basis(3, 3, 72))


def test_norm_table_of_phi01(phi01):
    table = norm_table(phi01)
    assert table[-1] == 1
    assert table[0] == 10
    assert table[3] == -64


def test_t0_2_shape():
    image = hecke_T0_2(generator('phi02', 24 * 9))
    assert (image.weight2, image.index2) == (0, 4)
    assert image.q0()


def test_tminus_requires_positive_m(phi01):
    with pytest.raises(ValidationError):
        hecke_Tminus(phi01, 0)
