from __future__ import annotations

import random

import pytest

from app.errors import ValidationError
from app.reports import CheckReport
from app.verify import hecke_suite, random_polynomial, ring_suite, run_suite


def test_random_polynomial_is_homogeneous():
    rng = random.Random(7)
    for m in range(1, 9):
        poly = random_polynomial(rng, m)
        assert poly.index == m


def test_unknown_suite():
    with pytest.raises(ValidationError):
        run_suite('bogus')
    with pytest.raises(ValidationError):
        run_suite('ring', qmax=0)


def test_ring_suite():
    report = ring_suite(2, samples=5)
    assert report.passed, report.failures()


def test_hecke_suite():
    report = hecke_suite(2, samples=5)
    assert report.passed, report.failures()
    assert any(e['status'] == 'info' for e in report.entries)


def test_report_prefix_and_failures():
    inner = CheckReport('inner')
    inner.add('a', True)
    inner.add('b', False)
    inner.add('c', False, enforced=False)
    outer = CheckReport('outer')
    outer.extend(inner, prefix='x')
    assert [e['check'] for e in outer.failures()] == ['x: b']
    assert len(outer.failures(enforced_only=False)) == 2
    assert not outer.passed
