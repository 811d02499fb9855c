from __future__ import annotations

import json

import pytest

from jacobi_cli import main


def run(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code, capsys.readouterr().out


def test_expand_text(capsys):
    code, out = run(['expand', 'phi01', '--qmax', '2'], capsys)
    assert code == 0
    assert 'q^0: (y^-1 + 10 + y)' in out
    assert 'q^1: (10*y^-2 - 64*y^-1 + 108 - 64*y + 10*y^2)' in out


def test_expand_json(capsys):
    code, out = run(['expand', 'Phi1*Phi3 - Phi2^2', '--qmax', '1', '--json'], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload['index2'] == 8
    assert [0, -4, "4"] in payload['terms']


def test_expand_unknown_generator(capsys):
    code, _ = run(['expand', 'Phi7'], capsys)
    assert code == 2


def test_genus_k3(capsys):
    code, out = run(['genus', '--d', '2', '--chi', '2,-20,2', '--json'], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload['euler'] == 24
    assert payload['chi_y'] == [2, -20, 2]


def test_genus_relation_violation(capsys):
    code, _ = run(['genus', '--d', '4', '--chi', '1,0,21,0,1'], capsys)
    assert code == 3


def test_genus_from_euler(capsys):
    code, out = run(['genus', '--d', '5', '--euler', '24', '--json'], capsys)
    assert code == 0
    assert json.loads(out)['chi'] == [0, -1, 11, -11, 1, 0]
    code, _ = run(['genus', '--d', '5', '--euler', '12'], capsys)
    assert code == 3


def test_genus_bad_chi_list(capsys):
    code, _ = run(['genus', '--d', '2', '--chi', '2,x,2'], capsys)
    assert code == 2


def test_genus_from_hodge_file(tmp_path, capsys):
    path = tmp_path / 'k3.csv'
    path.write_text('1,0,1\n0,20,0\n1,0,1\n', encoding='utf-8')
    code, out = run(['genus', '--hodge', str(path), '--json'], capsys)
    assert code == 0
    assert json.loads(out)['chi'] == [2, -20, 2]


def test_lift_explift(capsys):
    code, out = run(['lift', 'explift', '--form', '2*Phi1', '--qmax', '2', '--smax', '2', '--json'], capsys)
    assert code == 0
    assert json.loads(out)['weight2'] == 20


def test_lift_divisor(capsys):
    code, out = run(['lift', 'explift', '--form', 'Phi1', '--qmax', '2', '--smax', '2', '--divisor', '--json'],
                    capsys)
    assert code == 0
    assert json.loads(out)['divisor'] == [{"a": 0, "b": 1, "D": 1, "multiplicity": 1}]


def test_lift_precision_is_derived(capsys):
    code, _ = run(['lift', 'explift', '--name', 'Delta5', '--qmax', '3', '--smax', '3'], capsys)
    assert code == 0


def test_lift_arith(capsys):
    code, out = run(['lift', 'arith', '--name', 'Delta2', '--bound', '2', '--json'], capsys)
    assert code == 0
    assert [6, 2, 12, "1"] in json.loads(out)['terms']


def test_lift_requires_form(capsys):
    code, _ = run(['lift', 'explift'], capsys)
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / 'phi01.txt'
    code, out = run(['expand', 'phi01', '--qmax', '1', '--out', str(target)], capsys)
    assert code == 0
    assert out == ''
    assert 'q^0: (y^-1 + 10 + y)' in target.read_text(encoding='utf-8')


def test_verify_hecke(capsys):
    code, out = run(['verify', 'hecke', '--qmax', '2', '--samples', '3', '--json'], capsys)
    assert code == 0
    assert json.loads(out)['passed'] is True


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as info:
        main(['bogus'])
    assert info.value.code == 2
