from __future__ import annotations

import pytest

from app.errors import ValidationError
from app.genus import elliptic_genus
from app.jacobi.forms import generator
from app.models import CYInvariants
from app.siegel.lifts import exp_lift, named_lift
from app.siegel.quantized import (assemble_e_form, e_form, genus_coordinates, hodge_anomaly, sqeg,
                                  symmetric_product_genus)


def test_sqeg_euler_numbers(k3):
    genus = elliptic_genus(k3, 72)
    levels = {}
    for (_, _, ms), c in sqeg(genus, 3, 1).terms.items():
        levels[ms // 24] = levels.get(ms // 24, 0) + c
    assert [levels.get(n, 0) for n in range(4)] == [1, 24, 324, 3200]


def test_sqeg_linear_term_is_genus(k3):
    genus = elliptic_genus(k3, 72)
    assert symmetric_product_genus(genus, 1, 2).agrees_with(genus.series)


def test_k3_hodge_anomaly(k3):
    anomaly = hodge_anomaly(k3, 2)
    assert anomaly.prefactor == (-24, -4, -24)
    assert anomaly.y_factors == ((4, -2),)
    assert anomaly.weight2 == -20
    assert anomaly.character_order == 1


def test_k3_e_form_is_lift_of_minus_genus(k3):
    genus = elliptic_genus(k3, 48)
    assert e_form(k3, 2, 2).agrees_with(exp_lift(-genus, 2, 2))


def test_assembled_e_form(k3):
    assert assemble_e_form(k3, 2, 2).agrees_with(e_form(k3, 2, 2))


def test_mirror_pair_cancels(cy3):
    product = e_form(cy3, 2, 7) * e_form(cy3.mirror(), 2, 7)
    assert product.is_one()


def test_genus_coordinates(k3):
    assert genus_coordinates(elliptic_genus(k3, 24)) == {1: 2}


def test_assembly_dimension_support():
    inv = CYInvariants(d=7, chi=[0, 1, 5, -6, 6, -5, -1, 0])
    with pytest.raises(ValidationError):
        assemble_e_form(inv, 2, 2)


def test_e_form_without_chi0_is_power_of_delta2():
    inv = CYInvariants(d=4, chi=[0, -2, 8, -2, 0])
    assert elliptic_genus(inv, 72).agrees_with(2 * generator('phi02', 72))
    assert e_form(inv, 3, 3).agrees_with(named_lift('Delta2', 3, 3) ** -2)
