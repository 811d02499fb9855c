"""Слабые формы Якоби: тэта-ряды, генераторы кольца и вычисление многочленов от Φ1..Φ4."""
import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Dict, Optional

from app.errors import ValidationError, _check
from app.jacobi.polynomial import GeneratorPolynomial
from app.mappings import GENERATOR_ALIASES, GENERATOR_POLYS, GENERATOR_SHAPES
from app.modular import eta_power, kronecker, theta_constant
from app.rings import QQ, ZZ
from app.series import Series2, product_expand, series_exact_div, substitute_y

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobiForm:
    weight2: int
    index2: int
    series: Series2
    poly: Optional[GeneratorPolynomial] = None

    def __post_init__(self):
        for nq, ly in self.series.terms:
            if nq < 0:
                raise ValidationError(f"Слабая форма не может содержать q-показатель {nq}/24 < 0")
            if (ly - 2 * self.index2) % 4:
                raise ValidationError(f"y-показатель {ly}/4 не лежит в t + Z при индексе {self.index2}/2")

    # --- свойства ---

    @property
    def qprec(self):
        return self.series.qprec

    @property
    def ring(self):
        return self.series.ring

    def is_integral_index(self) -> bool:
        return self.index2 % 2 == 0

    @property
    def index(self) -> int:
        _check(self.is_integral_index(), 'index', f"должен быть целым, получено {self.index2}/2")
        return self.index2 // 2

    def row(self, n: int) -> Dict[int, object]:
        """Коэффициенты при q^n (n в единицах 1/24): {ly: c}."""
        return {ly: c for (nq, ly), c in self.series.terms.items() if nq == n}

    def rows(self) -> Dict[int, Dict[int, object]]:
        return {lvl[0]: poly for lvl, poly in self.series.levels().items()}

    def q0(self) -> Dict[int, object]:
        return self.row(0)

    def coeff(self, nq: int, ly: int):
        return self.series.coeff((nq, ly))

    def is_symmetric(self) -> bool:
        sign = -1 if self.weight2 % 4 == 2 else 1
        return all(self.series.coeff((nq, -ly)) == sign * c for (nq, ly), c in self.series.terms.items())

    # --- арифметика ---

    def _compatible(self, other: 'JacobiForm'):
        if (self.weight2, self.index2) != (other.weight2, other.index2):
            raise ValidationError(
                f"Нельзя складывать формы разного веса/индекса: "
                f"({self.weight2}/2, {self.index2}/2) и ({other.weight2}/2, {other.index2}/2)"
            )

    def __add__(self, other: 'JacobiForm') -> 'JacobiForm':
        self._compatible(other)
        poly = self.poly + other.poly if self.poly is not None and other.poly is not None else None
        return JacobiForm(self.weight2, self.index2, self.series + other.series, poly)

    def __neg__(self):
        return JacobiForm(self.weight2, self.index2, -self.series, None if self.poly is None else -self.poly)

    def __sub__(self, other: 'JacobiForm') -> 'JacobiForm':
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, JacobiForm):
            poly = self.poly * other.poly if self.poly is not None and other.poly is not None else None
            return JacobiForm(self.weight2 + other.weight2, self.index2 + other.index2,
                              self.series * other.series, poly)
        poly = None if self.poly is None else self.poly * other
        return JacobiForm(self.weight2, self.index2, self.series.scale(other), poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'JacobiForm':
        _check(k >= 0, 'k', "должен быть неотрицательным")
        poly = None if self.poly is None else self.poly ** k
        return JacobiForm(self.weight2 * k, self.index2 * k, self.series ** k, poly)

    def divide_scalar(self, c: int) -> 'JacobiForm':
        poly = None if self.poly is None else self.poly.exact_div(c)
        return JacobiForm(self.weight2, self.index2, self.series.divide_scalar(c), poly)

    def truncate(self, qprec: int) -> 'JacobiForm':
        return replace(self, series=self.series.truncate(qprec))

    def to_ring(self, ring) -> 'JacobiForm':
        return replace(self, series=self.series.to_ring(ring))

    def with_poly(self, poly: Optional[GeneratorPolynomial]) -> 'JacobiForm':
        return replace(self, poly=poly)

    def agrees_with(self, other: 'JacobiForm') -> bool:
        return (self.weight2, self.index2) == (other.weight2, other.index2) and self.series.agrees_with(other.series)

    def to_json(self) -> dict:
        payload = self.series.to_json()
        payload["weight2"] = self.weight2
        payload["index2"] = self.index2
        payload["poly"] = None if self.poly is None else str(self.poly)
        return payload


def zero_form(weight2: int, index2: int, qprec: int, ring=ZZ) -> JacobiForm:
    return JacobiForm(weight2, index2, Series2({}, qprec, ring=ring))


def constant_form(c, qprec: int) -> JacobiForm:
    return JacobiForm(0, 0, Series2.one(qprec=qprec).scale(c), GeneratorPolynomial.constant(c))


def theta_jacobi(qprec: int) -> JacobiForm:
    """ϑ(τ,z) = -q^{1/8} y^{-1/2} (1 - y) Π(1 - q^n y)(1 - q^n y^{-1})(1 - q^n)."""
    bound = qprec - 3
    factors = [((0, 4), 1)]
    for n in range(1, max(bound, 0) // 24 + 2):
        factors += [((24 * n, 4), 1), ((24 * n, -4), 1), ((24 * n, 0), 1)]
    body = product_expand(factors, bound, arity=2)
    terms = {(nq + 3, ly - 2): -c for (nq, ly), c in body.terms.items()}
    return JacobiForm(1, 1, Series2(terms, qprec))


def theta_sum(qprec: int) -> JacobiForm:
    """Тот же ϑ через сумму Σ (-4/m) q^{m²/8} y^{m/2}."""
    terms = {}
    m = 1
    while 3 * m * m < qprec:
        terms[(3 * m * m, 2 * m)] = kronecker(-4, m)
        terms[(3 * m * m, -2 * m)] = kronecker(-4, -m)
        m += 2
    return JacobiForm(1, 1, Series2(terms, qprec))


def theta_scaled(k: int, qprec: int) -> JacobiForm:
    """ϑ(τ, kz), индекс k²/2."""
    theta = theta_jacobi(qprec)
    return JacobiForm(1, k * k, substitute_y(theta.series, k))


def two_variable_theta(a: int, b: int, qprec: int) -> Series2:
    """ϑ_ab(τ,z) = Σ (-1)^{bn} q^{(n+a/2)²/2} y^{n+a/2}."""
    terms = {}
    v = a
    while 3 * v * v < qprec:
        for w in {v, -v}:
            n = (w - a) // 2
            terms[(3 * w * w, 2 * w)] = (-1) ** (b * n % 2)
        v += 2
    return Series2(terms, qprec)


def xi_ab(a: int, b: int, qprec: int) -> Series2:
    """ξ_ab = ϑ_ab(τ,z)/ϑ_ab(τ,0) над Q.

    Индекс 1/2, но y-показатели ξ00 и ξ01 целые, поэтому результат остаётся рядом:
    в t + Z попадают только произведения.
    """
    if (a, b) == (1, 1):
        raise ValidationError("ξ_11 не определена: ϑ_11(τ,0) = 0")
    work = qprec + 3
    num = two_variable_theta(a, b, work).to_ring(QQ)
    den = theta_constant(a, b, work).to_ring(QQ)
    return series_exact_div(num, den).truncate(qprec)


def canonical_name(name: str) -> str:
    canonical = GENERATOR_ALIASES.get(name, GENERATOR_ALIASES.get(name.lower()))
    if canonical is None:
        raise ValidationError(f"Неизвестный генератор: {name}. Доступные: {', '.join(GENERATOR_SHAPES)}")
    return canonical


def generator(name: str, qprec: int) -> JacobiForm:
    _check(qprec >= 24, 'qprec', "должно быть не меньше 24 (один полный порядок q)")
    return _build(canonical_name(name), qprec)


@lru_cache(maxsize=256)
def _build(name: str, qprec: int) -> JacobiForm:
    logger.debug(f"Построение генератора {name} (qprec={qprec})")
    weight2, index2 = GENERATOR_SHAPES[name]
    poly = GENERATOR_POLYS[name]
    poly = None if poly is None else GeneratorPolynomial.parse(poly)

    if name == 'phim112':
        series = series_exact_div(theta_jacobi(qprec + 3).series, eta_power(3, qprec + 3))
    elif name == 'phi032':
        series = series_exact_div(theta_scaled(2, qprec + 3).series, theta_jacobi(qprec + 3).series)
    elif name == 'phi04':
        series = series_exact_div(theta_scaled(3, qprec + 3).series, theta_jacobi(qprec + 3).series)
    elif name == 'phi01':
        squares = sum((xi_ab(a, b, qprec) ** 2 for a, b in [(0, 0), (1, 0), (0, 1)]),
                      Series2({}, qprec, ring=QQ))
        series = squares.scale(4).to_ring(ZZ)
    elif name == 'phi02':
        series = _phi02_series(qprec)
    elif name == 'phi03':
        series = _build('phi032', qprec).series ** 2
    elif name == 'phi06':
        series = (_build('phi02', qprec) * _build('phi04', qprec) - _build('phi03', qprec) ** 2).series
    elif name == 'phi08':
        series = (_build('phi02', qprec) * _build('phi06', qprec) - _build('phi04', qprec) ** 2).series
    elif name == 'phi012':
        series = (_build('phi04', qprec) * _build('phi08', qprec) - 2 * _build('phi06', qprec) ** 2).series
    elif name == 'xi06':
        series = eta_power(24, qprec) * _build('phim112', qprec).series ** 12
    else:
        raise ValidationError(f"Неизвестный генератор: {name}")

    form = JacobiForm(weight2, index2, series.truncate(qprec), poly)
    if weight2 % 4 == 0 and not form.is_symmetric():
        raise ValidationError(f"Генератор {name} не симметричен по l -> -l: ошибка построения")
    return form


def _phi02_series(qprec: int) -> Series2:
    """½ η^{-4} Σ (3m - n)(-4/m)(12/n) q^{(3m²+n²)/24} y^{(m+n)/2}."""
    bound = qprec + 4
    terms = {}
    m = 1
    while 3 * m * m < bound:
        for sm in (m, -m):
            n = 1
            while 3 * m * m + n * n < bound:
                for sn in (n, -n):
                    c = (3 * sm - sn) * kronecker(-4, sm) * kronecker(12, sn)
                    if c:
                        key = (3 * m * m + n * n, 2 * (sm + sn))
                        terms[key] = terms.get(key, 0) + c
                n += 1
        m += 2
    theta_double = Series2(terms, bound)
    return (theta_double * eta_power(-4, qprec - 4)).divide_scalar(2)


def evaluate(poly: GeneratorPolynomial, qprec: int, index: Optional[int] = None) -> JacobiForm:
    """Значение многочлена от Φ1..Φ4 на разложениях генераторов."""
    if poly.is_zero():
        _check(index is not None, 'index', "обязателен для нулевого многочлена")
        return JacobiForm(0, 2 * index, Series2({}, qprec), poly)
    if index is None:
        index = poly.index
    else:
        _check(poly.index == index, 'index', f"не совпадает с индексом многочлена {poly.index}")
    gens = [generator(f'phi0{i}', qprec).series for i in range(1, 5)]
    powers = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = gens[i] ** e
        return powers[(i, e)]

    total = Series2({}, qprec)
    for monomial, c in poly.terms().items():
        term = Series2.one(qprec=qprec)
        for i, e in enumerate(monomial):
            if e:
                term = term * power(i, e)
        total = total + term.scale(c)
    return JacobiForm(0, 2 * index, total, poly)


def form_from_expression(text: str, qprec: int) -> JacobiForm:
    """Имя генератора (в том числе полуцелого индекса) или многочлен от Φ1..Φ4."""
    text = text.strip()
    name = GENERATOR_ALIASES.get(text, GENERATOR_ALIASES.get(text.lower()))
    if name is not None:
        return generator(name, qprec)
    return evaluate(GeneratorPolynomial.parse(text), qprec)
