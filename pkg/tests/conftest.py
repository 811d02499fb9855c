from __future__ import annotations

import pytest

from app.jacobi.forms import generator
from app.models import CYInvariants


@pytest.fixture
def k3():
    return CYInvariants(d=2, chi=[2, -20, 2])


@pytest.fixture
def cy3():
    return CYInvariants.from_euler(3, -2)


@pytest.fixture
def cy4():
    return CYInvariants(d=4, chi=[1, 4, 6, 4, 1])


@pytest.fixture
def phi01():
    return generator('phi01', 72)


@pytest.fixture
def k3_hodge():
    return [[1, 0, 1], [0, 20, 0], [1, 0, 1]]
