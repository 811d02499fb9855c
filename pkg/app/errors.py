class JacobiError(Exception):
    """Базовая ошибка библиотеки; exit_code совпадает с кодом выхода CLI."""
    exit_code = 1


class ParseError(JacobiError, ValueError):
    exit_code = 2


class ValidationError(JacobiError, ValueError):
    exit_code = 2


class RingError(JacobiError):
    """Коэффициент не представим в активном кольце: нужно расширить кольцо."""
    exit_code = 2


class DivisibilityError(JacobiError):
    exit_code = 3

    def __init__(self, message: str, key=None):
        super().__init__(message)
        self.key = key


class IdentityError(JacobiError):
    exit_code = 3


class PrecisionError(JacobiError):
    exit_code = 4

    def __init__(self, message: str, needed=None):
        super().__init__(message)
        self.needed = needed


def _check(cond, key, msg, error=ValidationError):
    if not cond:
        raise error(f"Поле '{key}' {msg}")
