import logging
from datetime import datetime
from typing import Any, Dict, List, Optional

from app.errors import IdentityError
from app.mappings import LINE

logger = logging.getLogger(__name__)


class CheckReport:
    """Результаты набора проверок: тождества, соотношения, сравнения."""

    def __init__(self, title: str):
        self.title = title
        self.entries: List[Dict[str, Any]] = []
        self.start_time = datetime.now()
        self.end_time = None

    def add(self, check: str, passed: bool, enforced: bool = True, **details):
        entry = {'check': check, 'status': 'pass' if passed else 'fail', 'enforced': enforced}
        entry.update(details)
        self.entries.append(entry)
        if not passed:
            level = logging.ERROR if enforced else logging.INFO
            logger.log(level, f"{self.title}: проверка {check} не пройдена {details or ''}")
        return passed

    def add_info(self, check: str, **details):
        entry = {'check': check, 'status': 'info', 'enforced': False}
        entry.update(details)
        self.entries.append(entry)

    def extend(self, other: 'CheckReport', prefix: Optional[str] = None):
        for entry in other.entries:
            entry = dict(entry)
            if prefix:
                entry['check'] = f"{prefix}: {entry['check']}"
            self.entries.append(entry)

    def failures(self, enforced_only: bool = True) -> List[Dict[str, Any]]:
        return [e for e in self.entries
                if e['status'] == 'fail' and (e['enforced'] or not enforced_only)]

    @property
    def passed(self) -> bool:
        return not self.failures()

    def raise_on_failure(self, error=IdentityError):
        failed = self.failures()
        if failed:
            names = ', '.join(e['check'] for e in failed)
            raise error(f"{self.title}: не выполнены проверки {names}")

    def finish(self):
        self.end_time = datetime.now()
        return self

    def get_duration(self) -> float:
        if self.end_time:
            return (self.end_time - self.start_time).total_seconds()
        return 0

    def to_json(self) -> List[Dict[str, Any]]:
        return [{k: _plain(v) for k, v in entry.items()} for entry in self.entries]

    def __str__(self):
        lines = [LINE, self.title.upper(), LINE]
        for entry in self.entries:
            extra = {k: v for k, v in entry.items() if k not in ('check', 'status', 'enforced')}
            tag = '' if entry['enforced'] or entry['status'] == 'info' else ' (информативно)'
            details = ', '.join(f"{k}={_plain(v)}" for k, v in extra.items())
            lines.append(f"[{entry['status']}] {entry['check']}{tag}" + (f": {details}" if details else ''))
        lines.append(f"Проверок: {len(self.entries)}, не пройдено: {len(self.failures())}")
        lines.append(f"Время выполнения: {self.get_duration():.2f} сек")
        lines.append(LINE)
        return '\n'.join(lines) + '\n'


def _plain(value: Optional[Any]):
    """Значение, пригодное для JSON: дроби -> строки, кортежи -> списки."""
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)
