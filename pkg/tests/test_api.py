from __future__ import annotations

from fastapi.testclient import TestClient

from main import api

client = TestClient(api)


def test_root():
    assert client.get('/').status_code == 200


def test_expand():
    response = client.get('/expand/', params={'form': 'phi01', 'qmax': 1})
    assert response.status_code == 200
    assert [0, 0, "10"] in response.json()['terms']


def test_expand_bad_form():
    response = client.get('/expand/', params={'form': 'Phi9'})
    assert response.status_code == 400
    assert response.json()['detail']['exit_code'] == 2


def test_genus():
    response = client.post('/genus/', json={'d': 2, 'chi': [2, -20, 2]}, params={'qmax': 2})
    assert response.status_code == 200
    body = response.json()
    assert body['euler'] == 24
    assert body['passed'] is True


def test_genus_serre_violation():
    response = client.post('/genus/', json={'d': 2, 'chi': [2, -20, 3]})
    assert response.status_code == 400


def test_arithmetic_lift():
    response = client.get('/lift/arith', params={'name': 'Delta2', 'bound': 2})
    assert response.status_code == 200
    assert [6, -2, 12, "-1"] in response.json()['terms']


def test_named_lift():
    response = client.get('/lift/explift', params={'name': 'Delta5', 'qmax': 2, 'smax': 2})
    assert response.status_code == 200
    assert response.json()['weight2'] == 10


def test_unknown_suite():
    response = client.get('/verify/bogus')
    assert response.status_code == 400
