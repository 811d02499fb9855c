from __future__ import annotations

import pandas as pd
import pytest

from app.errors import ParseError, ValidationError
from app.hodge.extractor import read_hodge_table

K3 = [[1, 0, 1], [0, 20, 0], [1, 0, 1]]


def test_csv_with_semicolons(tmp_path):
    path = tmp_path / 'k3.csv'
    path.write_text('1;0;1\n0;20;0\n1;0;1\n', encoding='utf-8')
    assert read_hodge_table(str(path)) == K3


def test_xlsx(tmp_path):
    path = tmp_path / 'k3.xlsx'
    pd.DataFrame(K3).to_excel(path, header=False, index=False)
    assert read_hodge_table(str(path)) == K3


def test_non_square_table(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text('1,0,1\n0,20,0\n', encoding='utf-8')
    with pytest.raises(ParseError):
        read_hodge_table(str(path))


def test_non_numeric_cell(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text('1,0\nx,1\n', encoding='utf-8')
    with pytest.raises(ParseError):
        read_hodge_table(str(path))


def test_unknown_format(tmp_path):
    path = tmp_path / 'k3.txt'
    path.write_text('1 0 1', encoding='utf-8')
    with pytest.raises(ParseError):
        read_hodge_table(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ValidationError):
        read_hodge_table(str(tmp_path / 'none.csv'))
