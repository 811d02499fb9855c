"""Чтение таблицы чисел Ходжа h^{p,q} из CSV, XLSX или ODS."""
import logging
from itertools import product
from pathlib import Path
from typing import List

import pandas as pd

from app.errors import ParseError, ValidationError

logger = logging.getLogger(__name__)

CSV_ENCODINGS = ['utf-8', 'cp1251', 'latin1']
CSV_SEPARATORS = [',', ';', '\t']


def _read_csv(file_path: str) -> pd.DataFrame:
    for encoding, sep in product(CSV_ENCODINGS, CSV_SEPARATORS):
        try:
            df = pd.read_csv(file_path, encoding=encoding, sep=sep, header=None)
        except (UnicodeDecodeError, pd.errors.ParserError):
            continue
        if len(df.columns) > 1:
            logger.info(f"CSV прочитан (encoding={encoding}, sep='{sep}')")
            return df
    raise ParseError(f"Не удалось разобрать CSV с таблицей Ходжа: {file_path}")


def _read_spreadsheet(engine: str):
    def reader(file_path: str) -> pd.DataFrame:
        df = pd.read_excel(file_path, engine=engine, header=None)
        logger.info(f"Таблица прочитана ({engine})")
        return df
    return reader


READERS = {
    'csv': _read_csv,
    'xlsx': _read_spreadsheet('openpyxl'),
    'ods': _read_spreadsheet('odf'),
}
FORMATS = list(READERS)


def read_file(file_path: str, file_format: str = None) -> pd.DataFrame:
    path = Path(file_path)
    if not path.is_file():
        raise ValidationError(f"Файл не найден: {file_path}")
    file_format = file_format or path.suffix.lower().lstrip('.')
    reader = READERS.get(file_format)
    if reader is None:
        raise ParseError(f"Неподдерживаемый формат таблицы Ходжа: {file_format}. Доступные: {', '.join(FORMATS)}")
    logger.info(f"Чтение {file_path} как {file_format}")
    return reader(file_path)


def read_hodge_table(file_path: str, file_format: str = None) -> List[List[int]]:
    """Квадратная таблица h^{p,q}: строка p, столбец q, без заголовков."""
    df = read_file(file_path, file_format).dropna(how='all').dropna(axis=1, how='all')
    rows, cols = df.shape
    if rows != cols:
        raise ParseError(f"Таблица чисел Ходжа должна быть квадратной, получено {rows}×{cols}")
    try:
        numeric = df.apply(pd.to_numeric, errors='raise')
    except (ValueError, TypeError) as e:
        raise ParseError(f"Таблица чисел Ходжа содержит нечисловые значения: {e}")
    if numeric.isna().any().any():
        raise ParseError("Таблица чисел Ходжа содержит пустые ячейки")
    if not (numeric == numeric.round()).all().all():
        raise ParseError("Числа Ходжа должны быть целыми")
    table = numeric.astype(int).values.tolist()
    logger.info(f"Прочитана таблица Ходжа размерности d = {rows - 1}")
    return table
