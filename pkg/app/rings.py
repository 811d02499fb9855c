"""Кольца коэффициентов рядов: Z, Q и кольца круговых целых Z[ζ_N] при N <= 6.

Коэффициенты хранятся как int, Fraction или CyclotomicInteger; кольцо задаёт
приведение, точное деление и строковое представление для JSON.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, Symbol, cyclotomic_poly, totient

from app.errors import RingError, ParseError

logger = logging.getLogger(__name__)

_x = Symbol('x')


@lru_cache(maxsize=None)
def _modulus(conductor: int) -> tuple:
    """Коэффициенты Φ_N от младшего к старшему, без старшей единицы."""
    coeffs = Poly(cyclotomic_poly(conductor, _x), _x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs[1:]))


def _reduce(conductor: int, coeffs) -> tuple:
    low = _modulus(conductor)
    deg = len(low)
    work = list(coeffs)
    for top in range(len(work) - 1, deg - 1, -1):
        c = work[top]
        if c:
            work[top] = 0
            for i, m in enumerate(low):
                work[top - deg + i] -= c * m
    work = work[:deg] + [0] * (deg - len(work))
    return tuple(work)


@dataclass(frozen=True)
class CyclotomicInteger:
    conductor: int
    coeffs: tuple

    @classmethod
    def from_int(cls, conductor: int, value: int) -> 'CyclotomicInteger':
        return cls(conductor, _reduce(conductor, [value]))

    @classmethod
    def root(cls, conductor: int, k: int) -> 'CyclotomicInteger':
        raw = [0] * conductor
        raw[k % conductor] = 1
        return cls(conductor, _reduce(conductor, raw))

    def _lift(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.conductor != self.conductor:
                raise RingError(f"Разные кольца Z[ζ{self.conductor}] и Z[ζ{other.conductor}]")
            return other
        if isinstance(other, int):
            return CyclotomicInteger.from_int(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.conductor, tuple(a * other for a in self.coeffs))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        raw = [0] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    raw[i + j] += a * b
        return CyclotomicInteger(self.conductor, _reduce(self.conductor, raw))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.conductor, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def rational_part(self):
        """Целое значение, если элемент лежит в Z, иначе None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]


class IntegerRing:
    name = 'ZZ'
    zero = 0
    one = 1

    def coerce(self, value):
        if isinstance(value, bool):
            return int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        if isinstance(value, CyclotomicInteger) and value.rational_part() is not None:
            return value.rational_part()
        raise RingError(f"Коэффициент {value} не является целым числом")

    def divide_exact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("Деление на ноль в кольце ZZ")
        q, r = divmod(a, b)
        return None if r else q

    def root_of_unity(self, k: int, n: int):
        if (2 * k) % n == 0:
            return -1 if (2 * k // n) % 2 else 1
        raise RingError(f"ζ_{n}^{k} не лежит в ZZ: требуется кольцо Z[ζ{n}]")

    def format(self, value) -> str:
        return str(value)

    def parse(self, text: str):
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"Не удалось разобрать целый коэффициент '{text}'")

    def __repr__(self):
        return self.name


class RationalField(IntegerRing):
    name = 'QQ'

    def coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise RingError(f"Коэффициент {value} не является рациональным числом")

    def divide_exact(self, a, b):
        if b == 0:
            raise ZeroDivisionError("Деление на ноль в поле QQ")
        return Fraction(a) / b

    def format(self, value) -> str:
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"

    def parse(self, text: str):
        try:
            return Fraction(text)
        except ValueError:
            raise ParseError(f"Не удалось разобрать рациональный коэффициент '{text}'")


class CyclotomicRing:
    def __init__(self, conductor: int):
        if conductor < 1 or conductor > 6:
            raise RingError(f"Поддерживаются только Z[ζN] с N <= 6, получено N={conductor}")
        self.conductor = conductor
        self.degree = int(totient(conductor))
        self.name = f"Z[zeta{conductor}]"
        self.zero = CyclotomicInteger.from_int(conductor, 0)
        self.one = CyclotomicInteger.from_int(conductor, 1)
        self._units = []
        for k in range(conductor):
            root, inverse = CyclotomicInteger.root(conductor, k), CyclotomicInteger.root(conductor, -k)
            self._units.append((root, inverse))
            self._units.append((-root, -inverse))

    def coerce(self, value):
        if isinstance(value, CyclotomicInteger):
            if value.conductor != self.conductor:
                raise RingError(f"Элемент Z[ζ{value.conductor}] не лежит в {self.name}")
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            value = int(value)
        if isinstance(value, int):
            return CyclotomicInteger.from_int(self.conductor, value)
        raise RingError(f"Коэффициент {value} не лежит в {self.name}")

    def divide_exact(self, a, b):
        b = self.coerce(b)
        a = self.coerce(a)
        scalar = b.rational_part()
        if scalar is not None:
            if scalar == 0:
                raise ZeroDivisionError(f"Деление на ноль в {self.name}")
            if any(c % scalar for c in a.coeffs):
                return None
            return CyclotomicInteger(self.conductor, tuple(c // scalar for c in a.coeffs))
        for unit, inverse in self._units:
            if unit == b:
                return a * inverse
        raise RingError(f"Деление на необратимый элемент {self.format(b)} в {self.name} не поддерживается")

    def root_of_unity(self, k: int, n: int):
        if (k * self.conductor) % n:
            raise RingError(f"ζ_{n}^{k} не лежит в {self.name}")
        return CyclotomicInteger.root(self.conductor, k * self.conductor // n)

    def format(self, value) -> str:
        return ','.join(str(c) for c in self.coerce(value).coeffs)

    def parse(self, text: str):
        try:
            coeffs = [int(c) for c in text.split(',')]
        except ValueError:
            raise ParseError(f"Не удалось разобрать коэффициент '{text}' кольца {self.name}")
        return CyclotomicInteger(self.conductor, _reduce(self.conductor, coeffs))

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and other.conductor == self.conductor

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


ZZ = IntegerRing()
QQ = RationalField()
GAUSSIAN = CyclotomicRing(4)


def ring_by_name(name: str):
    if name == ZZ.name:
        return ZZ
    if name == QQ.name:
        return QQ
    if name.startswith('Z[zeta') and name.endswith(']'):
        try:
            return CyclotomicRing(int(name[6:-1]))
        except ValueError:
            pass
    raise ParseError(f"Неизвестное кольцо коэффициентов: {name}")


def cyclotomic(conductor: int) -> CyclotomicRing:
    return GAUSSIAN if conductor == 4 else CyclotomicRing(conductor)
