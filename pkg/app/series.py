"""Разреженные точные ряды Лорана-Пюизё от (q, y) и (q, y, s).

Показатели хранятся целыми числами в фиксированных единицах: nq в 1/24,
ly в 1/4, ms в 1/24. qprec и sprec исключающие границы в тех же единицах:
все члены с nq < qprec (ms < sprec) известны точно, остальные не хранятся.
None означает точный (конечный) ряд без усечения.
"""
import heapq
import logging
from collections import defaultdict
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, Optional, Tuple

from app.errors import DivisibilityError, PrecisionError, RingError, ParseError
from app.rings import ZZ, ring_by_name

logger = logging.getLogger(__name__)

DENOMINATORS = (24, 4, 24)


def _pmin(*values):
    known = [v for v in values if v is not None]
    return min(known) if known else None


def _padd(prec, shift):
    return None if prec is None else prec + shift


class Series:
    arity = 0

    __slots__ = ('terms', 'qprec', 'sprec', 'ring')

    def __init__(self, terms=None, qprec: Optional[int] = None,
                 sprec: Optional[int] = None, ring=ZZ):
        clean = {}
        for key, coeff in (terms or {}).items():
            if len(key) != self.arity:
                raise ValueError(f"Ключ {key} не соответствует ряду от {self.arity} переменных")
            if qprec is not None and key[0] >= qprec:
                continue
            if sprec is not None and self.arity == 3 and key[2] >= sprec:
                continue
            if coeff:
                clean[tuple(key)] = coeff
        self.terms: Dict[tuple, object] = clean
        self.qprec = qprec
        self.sprec = sprec if self.arity == 3 else None
        self.ring = ring

    # --- конструкторы ---

    @classmethod
    def one(cls, ring=ZZ, qprec=None, sprec=None):
        return cls({(0,) * cls.arity: ring.one}, qprec, sprec, ring)

    @classmethod
    def monomial(cls, key, coeff=1, ring=ZZ, qprec=None, sprec=None):
        return cls({tuple(key): ring.coerce(coeff)}, qprec, sprec, ring)

    def _like(self, terms, qprec=None, sprec=None):
        return type(self)(terms, qprec, sprec, self.ring)

    # --- свойства ---

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def minq(self) -> int:
        if self.terms:
            return min(k[0] for k in self.terms)
        return self.qprec if self.qprec is not None else 0

    @property
    def mins(self) -> int:
        if self.arity != 3:
            return 0
        if self.terms:
            return min(k[2] for k in self.terms)
        return self.sprec if self.sprec is not None else 0

    def is_exact(self) -> bool:
        return self.qprec is None and self.sprec is None

    def coeff(self, key):
        return self.terms.get(tuple(key), self.ring.zero)

    def items(self):
        return sorted(self.terms.items())

    def levels(self) -> Dict[tuple, Dict[int, object]]:
        """Группировка по уровням (nq) или (nq, ms): уровень -> {ly: коэффициент}."""
        grouped = defaultdict(dict)
        for key, c in self.terms.items():
            grouped[self._level(key)][key[1]] = c
        return dict(grouped)

    def _level(self, key):
        return (key[0],) if self.arity == 2 else (key[0], key[2])

    def _key(self, level, ly):
        return (level[0], ly) if self.arity == 2 else (level[0], ly, level[1])

    # --- кольцо и усечение ---

    def to_ring(self, ring):
        return type(self)({k: ring.coerce(c) for k, c in self.terms.items()},
                          self.qprec, self.sprec, ring)

    def truncate(self, qprec=None, sprec=None):
        return self._like(self.terms, _pmin(self.qprec, qprec), _pmin(self.sprec, sprec))

    def scale(self, c):
        c = self.ring.coerce(c)
        return self._like({k: v * c for k, v in self.terms.items()}, self.qprec, self.sprec)

    def divide_scalar(self, c):
        """Точное деление всех коэффициентов на скаляр кольца."""
        out = {}
        for key, v in self.terms.items():
            q = self.ring.divide_exact(v, c)
            if q is None:
                raise DivisibilityError(f"Коэффициент {v} при {key} не делится на {c}", key)
            out[key] = q
        return self._like(out, self.qprec, self.sprec)

    def agrees_with(self, other: 'Series') -> bool:
        """Совпадение в общей области точности."""
        qprec = _pmin(self.qprec, other.qprec)
        sprec = _pmin(self.sprec, other.sprec)
        return self.truncate(qprec, sprec).terms == other.truncate(qprec, sprec).terms

    # --- арифметика ---

    def __add__(self, other):
        if isinstance(other, Series):
            return series_add(self, other)
        return series_add(self, self.one(self.ring).scale(other))

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()}, self.qprec, self.sprec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (type(self) is type(other) and self.terms == other.terms
                and self.qprec == other.qprec and self.sprec == other.sprec)

    def __repr__(self):
        return f"{type(self).__name__}({len(self.terms)} членов, qprec={self.qprec}, sprec={self.sprec}, {self.ring})"

    # --- сериализация ---

    def to_json(self) -> dict:
        payload = {"den": list(DENOMINATORS[:self.arity]), "qprec": self.qprec}
        if self.arity == 3:
            payload["sprec"] = self.sprec
        payload["ring"] = self.ring.name
        payload["terms"] = [[*key, self.ring.format(c)] for key, c in self.items()]
        return payload

    @staticmethod
    def from_json(payload: dict) -> 'Series':
        den = payload.get("den")
        if den == list(DENOMINATORS[:2]):
            cls = Series2
        elif den == list(DENOMINATORS):
            cls = Series3
        else:
            raise ParseError(f"Неподдерживаемые знаменатели показателей: {den}")
        ring = ring_by_name(payload.get("ring", ZZ.name))
        terms = {}
        for row in payload.get("terms", []):
            if len(row) != cls.arity + 1:
                raise ParseError(f"Некорректная строка членов ряда: {row}")
            terms[tuple(int(x) for x in row[:-1])] = ring.parse(str(row[-1]))
        return cls(terms, payload.get("qprec"), payload.get("sprec"), ring)


class Series2(Series):
    arity = 2
    __slots__ = ()


class Series3(Series):
    arity = 3
    __slots__ = ()


def _same_ring(a: Series, b: Series):
    if a.ring != b.ring:
        raise RingError(f"Кольца коэффициентов не совпадают: {a.ring} и {b.ring}")
    if type(a) is not type(b):
        raise RingError(f"Ряды разной арности: {type(a).__name__} и {type(b).__name__}")


def series_add(a: Series, b: Series) -> Series:
    _same_ring(a, b)
    out = dict(a.terms)
    for key, c in b.terms.items():
        out[key] = out.get(key, a.ring.zero) + c
    return a._like(out, _pmin(a.qprec, b.qprec), _pmin(a.sprec, b.sprec))


def series_mul(a: Series, b: Series) -> Series:
    _same_ring(a, b)
    if (a.is_zero() and a.is_exact()) or (b.is_zero() and b.is_exact()):
        return a._like({})
    qprec = _pmin(_padd(a.qprec, b.minq), _padd(b.qprec, a.minq))
    sprec = _pmin(_padd(a.sprec, b.mins), _padd(b.sprec, a.mins))
    zero = a.ring.zero
    out = {}
    right = sorted(b.terms.items())
    three = a.arity == 3
    for ka, ca in a.terms.items():
        for kb, cb in right:
            nq = ka[0] + kb[0]
            if qprec is not None and nq >= qprec:
                break
            if three:
                ms = ka[2] + kb[2]
                if sprec is not None and ms >= sprec:
                    continue
                key = (nq, ka[1] + kb[1], ms)
            else:
                key = (nq, ka[1] + kb[1])
            out[key] = out.get(key, zero) + ca * cb
    return a._like(out, qprec, sprec)


def series_pow(a: Series, k: int) -> Series:
    if k < 0:
        if a.is_exact() and len(a.terms) != 1:
            raise PrecisionError(f"Обратный к точному ряду из {len(a.terms)} членов бесконечен: "
                                 f"задайте qprec перед возведением в степень {k}")
        return series_exact_div(a.one(a.ring), series_pow(a, -k))
    result = a.one(a.ring)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def _divide_laurent(p: Dict[int, object], d: Dict[int, object], ring, where):
    """Деление многочленов Лорана по y, начиная с младших степеней."""
    d_low, d_high = min(d), max(d)
    lead = d[d_low]
    top = max(p) - d_high
    rem = dict(p)
    out = {}
    while rem:
        low = min(rem)
        e = low - d_low
        c = ring.divide_exact(rem[low], lead)
        if c is None or e > top:
            raise DivisibilityError(f"Неточное деление рядов на уровне {where}, y-показатель {low}", where)
        out[e] = c
        for ly, dc in d.items():
            v = rem.get(ly + e, ring.zero) - c * dc
            if v:
                rem[ly + e] = v
            else:
                rem.pop(ly + e, None)
    return out


def series_exact_div(a: Series, b: Series) -> Series:
    """Частное a/b; деление ведётся по минимальному уровню делителя."""
    _same_ring(a, b)
    if b.is_zero():
        raise ZeroDivisionError("Деление на нулевой ряд")
    three = a.arity == 3
    n0 = b.minq
    m0 = b.mins if three else 0
    b_levels = b.levels()
    lead_level = (n0, m0) if three else (n0,)
    if lead_level not in b_levels:
        raise DivisibilityError(f"У делителя нет ведущего уровня {lead_level}", lead_level)
    lead = b_levels[lead_level]

    exact = a.is_exact() and b.is_exact()
    qprec = _pmin(_padd(a.qprec, -n0), _padd(b.qprec, a.minq - 2 * n0))
    sprec = _pmin(_padd(a.sprec, -m0), _padd(b.sprec, a.mins - 2 * m0)) if three else None
    if exact and a.terms:
        q_stop = max(k[0] for k in a.terms) - n0 + 1
        s_stop = max(k[2] for k in a.terms) - m0 + 1 if three else None
    else:
        q_stop, s_stop = qprec, sprec

    remainder = {lvl: dict(poly) for lvl, poly in a.levels().items()}
    heap = list(remainder)
    heapq.heapify(heap)
    quotient = {}
    shifts = [(lvl, poly) for lvl, poly in b_levels.items()]
    while heap:
        level = heapq.heappop(heap)
        poly = remainder.pop(level, None)
        if not poly:
            continue
        rel = tuple(x - y for x, y in zip(level, lead_level))
        if q_stop is not None and rel[0] >= q_stop:
            if exact:
                raise DivisibilityError(f"Неточное деление: остаток на уровне {level}", level)
            continue
        if three and s_stop is not None and rel[1] >= s_stop:
            if exact:
                raise DivisibilityError(f"Неточное деление: остаток на уровне {level}", level)
            continue
        qpoly = _divide_laurent(poly, lead, a.ring, level)
        for ly, c in qpoly.items():
            quotient[a._key(rel, ly)] = c
        for blvl, bpoly in shifts:
            target = tuple(x + y for x, y in zip(rel, blvl))
            if target == level:
                continue
            tpoly = remainder.get(target)
            if tpoly is None:
                tpoly = remainder[target] = {}
                heapq.heappush(heap, target)
            for ly, qc in qpoly.items():
                for bly, bc in bpoly.items():
                    key = ly + bly
                    v = tpoly.get(key, a.ring.zero) - qc * bc
                    if v:
                        tpoly[key] = v
                    else:
                        tpoly.pop(key, None)
    result = a._like(quotient, qprec, sprec)
    if exact and series_mul(result, b) != a:
        raise DivisibilityError("Неточное деление точных рядов")
    return result


def monomial_substitute(a: Series, key_map: Callable[[tuple], tuple],
                        twist: Optional[Callable[[tuple], object]] = None,
                        qprec=None, sprec=None, target=None, ring=None) -> Series:
    """Замена мономов key -> key_map(key) с домножением на twist(key).

    Совпавшие образы складываются; точность результата задаёт вызывающий.
    """
    ring = ring or a.ring
    cls = target or type(a)
    out = {}
    for key, c in a.terms.items():
        new_key = tuple(key_map(key))
        value = ring.coerce(c)
        if twist is not None:
            value = value * ring.coerce(twist(key))
        out[new_key] = out.get(new_key, ring.zero) + value
    return cls(out, qprec, sprec, ring)


def substitute_y(a: Series, j: int) -> Series:
    """y -> y^j."""
    if a.arity == 2:
        return monomial_substitute(a, lambda k: (k[0], j * k[1]), qprec=a.qprec)
    return monomial_substitute(a, lambda k: (k[0], j * k[1], k[2]), qprec=a.qprec, sprec=a.sprec)


def substitute_s(a: Series, k: int) -> Series:
    """s -> s^k при k > 0."""
    if k <= 0:
        raise ValueError(f"Показатель подстановки s должен быть положительным: {k}")
    return monomial_substitute(a, lambda key: (key[0], key[1], k * key[2]),
                               qprec=a.qprec, sprec=None if a.sprec is None else a.sprec * k)


def shift_half_omega(a: Series) -> Series:
    """ω -> ω + 1/2: множитель e^{πi·ms/24} при каждом s-показателе."""
    for key in a.terms:
        if key[2] % 12:
            raise RingError(f"Сдвиг ω на 1/2 требует ms кратных 12, получено {key[2]}")
    return monomial_substitute(a, lambda k: k, twist=lambda k: a.ring.root_of_unity(k[2] // 12, 4),
                               qprec=a.qprec, sprec=a.sprec)


def product_expand(factors: Iterable[Tuple[tuple, int]], qprec: Optional[int],
                   sprec: Optional[int] = None, arity: int = 3, ring=ZZ) -> Series:
    """Произведение (1 - моном(key))^e, усечённое по q и s."""
    cls = Series3 if arity == 3 else Series2
    acc = {(0,) * arity: ring.one}
    for key, e in factors:
        key = tuple(key)
        if len(key) != arity:
            raise ValueError(f"Ключ множителя {key} не соответствует арности {arity}")
        if not e:
            continue
        nq, ms = key[0], key[2] if arity == 3 else 0
        if not any(key):
            raise ValueError("Множитель с нулевым мономом (1 - 1)^e недопустим")
        if nq < 0 or ms < 0:
            raise ValueError(f"Множитель {key} направлен в отрицательную сторону")
        if qprec is not None and nq >= qprec:
            continue
        if arity == 3 and sprec is not None and ms >= sprec:
            continue
        kmax = e if e > 0 else None
        if nq > 0 and qprec is not None:
            bound = (qprec - 1) // nq
            kmax = bound if kmax is None else min(kmax, bound)
        if ms > 0 and sprec is not None:
            bound = (sprec - 1) // ms
            kmax = bound if kmax is None else min(kmax, bound)
        if kmax is None:
            raise PrecisionError(f"Множитель {key} в степени {e} не усекается: задайте точность")
        if e > 0:
            coeffs = [comb(e, k) * (-1) ** k for k in range(kmax + 1)]
        else:
            coeffs = [comb(-e + k - 1, k) for k in range(kmax + 1)]
        out = {}
        for base, c in acc.items():
            for k, bc in enumerate(coeffs):
                shifted = tuple(x + k * y for x, y in zip(base, key))
                if qprec is not None and shifted[0] >= qprec:
                    break
                if arity == 3 and sprec is not None and shifted[2] >= sprec:
                    break
                v = out.get(shifted, ring.zero) + c * bc
                if v:
                    out[shifted] = v
                else:
                    out.pop(shifted, None)
        acc = out
    return cls(acc, qprec, sprec, ring)


def format_exponent(units: int, den: int) -> str:
    value = Fraction(units, den)
    return str(value.numerator) if value.denominator == 1 else f"({value})"


def render_y_poly(row: Dict[int, object], ring=ZZ) -> str:
    if not row:
        return "0"
    parts = []
    for ly in sorted(row):
        c = ring.format(row[ly])
        if ly == 0:
            mono = c
        else:
            y = "y" if ly == 4 else f"y^{format_exponent(ly, 4)}"
            mono = y if c == "1" else f"-{y}" if c == "-1" else f"{c}*{y}"
        parts.append(mono)
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def render_rows(series: Series) -> list:
    """Текстовые строки по уровням q (и s), в стиле (y + 10 + y^-1)."""
    lines = []
    for level, row in sorted(series.levels().items()):
        label = f"q^{format_exponent(level[0], 24)}"
        if series.arity == 3:
            label += f" s^{format_exponent(level[1], 24)}"
        lines.append(f"{label}: ({render_y_poly(row, series.ring)})")
    return lines
