from __future__ import annotations

import pydantic
import pytest

from app.errors import DivisibilityError
from app.models import CYInvariants, GenusRequest


def test_from_hodge(k3_hodge):
    inv = CYInvariants.from_hodge(k3_hodge)
    assert inv.chi == [2, -20, 2]
    assert inv.euler == 24


def test_from_euler():
    assert CYInvariants.from_euler(5, 24).chi == [0, -1, 11, -11, 1, 0]
    assert CYInvariants.from_euler(3, -2).chi == [0, 1, -1, 0]
    with pytest.raises(DivisibilityError):
        CYInvariants.from_euler(5, 12)
    with pytest.raises(DivisibilityError):
        CYInvariants.from_euler(3, 3)


def test_mirror(cy3):
    assert cy3.mirror().chi == [0, -1, 1, 0]
    assert cy3.mirror().euler == -cy3.euler


def test_serre_duality_violation():
    with pytest.raises(pydantic.ValidationError):
        CYInvariants(d=2, chi=[2, -20, 3])


def test_asymmetric_hodge_table():
    with pytest.raises(pydantic.ValidationError):
        CYInvariants(d=1, hodge=[[1, 2], [1, 1]])


def test_genus_request_sources(k3_hodge):
    assert GenusRequest(d=3, euler=-2).invariants().chi == [0, 1, -1, 0]
    assert GenusRequest(d=2, hodge=k3_hodge).invariants().chi == [2, -20, 2]
    assert GenusRequest(d=2, chi=[1, -10, 1]).invariants().euler == 12
