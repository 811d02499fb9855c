from __future__ import annotations

import pytest

from app.errors import DivisibilityError, IdentityError, JacobiError, ValidationError
from app.genus import chi_y_polynomial, divisibility_report, elliptic_genus, q0_from_chi, relation_check
from app.jacobi.forms import generator
from app.models import CYInvariants


def test_k3_genus_is_twice_phi01(k3, phi01):
    genus = elliptic_genus(k3, 72)
    assert genus.agrees_with(2 * phi01)
    assert chi_y_polynomial(genus) == [2, -20, 2]


def test_enriques_genus(phi01):
    genus = elliptic_genus(CYInvariants(d=2, chi=[1, -10, 1]), 72)
    assert genus.agrees_with(phi01)


def test_cy3_genus_is_half_euler_times_phi032(cy3):
    assert q0_from_chi(cy3) == {2: -1, -2: -1}
    assert elliptic_genus(cy3, 48).agrees_with(-generator('phi032', 48))


def test_cy4_relation(cy4):
    assert relation_check(cy4).passed
    genus = elliptic_genus(cy4, 48)
    assert chi_y_polynomial(genus) == cy4.chi


def test_cy4_relation_violation():
    with pytest.raises(JacobiError) as info:
        elliptic_genus(CYInvariants(d=4, chi=[1, 0, 21, 0, 1]), 48)
    assert info.value.exit_code == 3
    assert isinstance(info.value, (IdentityError, DivisibilityError))


def test_cy7_euler_relation():
    inv = CYInvariants(d=7, chi=[0, 1, 5, -6, 6, -5, -1, 0])
    report = relation_check(inv)
    entry = next(e for e in report.entries if e['check'] == 'e = 12(χ2 − 3χ1)')
    assert (entry['status'] == 'pass') == (inv.euler == 12 * (5 - 3))


def test_d12_requires_xi6_coefficient():
    chi = [1] + [0] * 11 + [1]
    with pytest.raises(ValidationError):
        elliptic_genus(CYInvariants(d=12, chi=chi), 48)


def test_k3_divisibility(k3):
    report = divisibility_report(k3, 96)
    assert report.passed, report.failures()
    assert any(e['check'].startswith('z=1/2') for e in report.entries)
