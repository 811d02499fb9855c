"""Экспоненциальный подъём слабых форм Якоби в параскобочные формы Зигеля.

Ряд Зигеля хранится в виде q^A y^B s^C · Π(1 - y^{-k})^{e_k} · тело, где тело
есть Series3 с единичным (или хотя бы обратимым) младшим уровнем. Так
представимы и мероморфные произведения вроде Δ5^{-2}: полюс вдоль z = 0
остаётся множителем (1 - y^{-1})^{-2} и не раскрывается в бесконечный ряд.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from app.errors import DivisibilityError, PrecisionError, RingError, ValidationError, _check
from app.jacobi.basis import genus_basis, psi2_variantA
from app.jacobi.forms import JacobiForm, generator
from app.jacobi.hecke import integral_orders
from app.mappings import DEFAULT_QMAX, DEFAULT_SMAX, SIEGEL_ALIASES
from app.rings import ZZ, cyclotomic
from app.series import (Series3, product_expand, series_exact_div, series_mul, series_pow,
                        shift_half_omega, substitute_s, substitute_y)

logger = logging.getLogger(__name__)


def _factors(pairs) -> Tuple[Tuple[int, int], ...]:
    merged: Dict[int, int] = {}
    for k, e in pairs:
        merged[k] = merged.get(k, 0) + e
    return tuple(sorted((k, e) for k, e in merged.items() if e))


@dataclass(frozen=True)
class SiegelSeries:
    body: Series3
    prefactor: Tuple[int, int, int] = (0, 0, 0)
    # (k, e): множитель (1 - y^{-k/4})^e, k > 0 в единицах ly
    y_factors: Tuple[Tuple[int, int], ...] = ()
    # общий множитель e^{2πi·phase}
    phase: Fraction = field(default=Fraction(0))
    weight2: Optional[int] = None
    character_order: Optional[int] = None
    index_t: Optional[int] = None

    @property
    def qprec(self):
        return None if self.body.qprec is None else self.body.qprec + self.prefactor[0]

    @property
    def sprec(self):
        return None if self.body.sprec is None else self.body.sprec + self.prefactor[2]

    @property
    def series(self) -> Series3:
        return self.expand()

    def _structure(self):
        return self.prefactor, self.y_factors, self.phase % 1

    # --- арифметика ---

    def __mul__(self, other: 'SiegelSeries') -> 'SiegelSeries':
        return SiegelSeries(
            body=series_mul(self.body, other.body),
            prefactor=tuple(a + b for a, b in zip(self.prefactor, other.prefactor)),
            y_factors=_factors(self.y_factors + other.y_factors),
            phase=(self.phase + other.phase) % 1,
            weight2=None if self.weight2 is None or other.weight2 is None else self.weight2 + other.weight2,
            index_t=self.index_t if self.index_t == other.index_t else None,
        )

    def __pow__(self, k: int) -> 'SiegelSeries':
        return SiegelSeries(
            body=series_pow(self.body, k),
            prefactor=tuple(k * a for a in self.prefactor),
            y_factors=_factors((f, k * e) for f, e in self.y_factors),
            phase=(k * self.phase) % 1,
            weight2=None if self.weight2 is None else k * self.weight2,
            character_order=self.character_order,
            index_t=self.index_t,
        )

    def inverse(self) -> 'SiegelSeries':
        return self ** -1

    def truncate(self, qmax: int, smax: int) -> 'SiegelSeries':
        """Усечение тела по целым порядкам q и s."""
        return replace(self, body=self.body.truncate(24 * qmax, 24 * smax))

    # --- подстановки ---

    def substitute(self, j: int, k: int) -> 'SiegelSeries':
        """y -> y^j, s -> s^k; (τ,2z,4ω) соответствует j=2, k=4."""
        _check(j != 0, 'j', "должно быть ненулевым")
        nq, ly, ms = self.prefactor
        ly *= j
        phase = self.phase
        pairs = []
        for f, e in self.y_factors:
            pairs.append((abs(j) * f, e))
            if j < 0:
                # 1 - y^{k} = -y^{k}(1 - y^{-k})
                ly += abs(j) * f * e
                phase += Fraction(e, 2)
        body = substitute_s(substitute_y(self.body, j), k)
        return replace(self, body=body, prefactor=(nq, ly, k * ms), y_factors=_factors(pairs), phase=phase % 1)

    def shift_half_omega(self) -> 'SiegelSeries':
        """ω -> ω + 1/2; префактор s^C даёт множитель e^{πiC}."""
        return replace(self, body=shift_half_omega(self.body),
                       phase=(self.phase + Fraction(self.prefactor[2], 48)) % 1)

    # --- раскрытие и сравнение ---

    def _unit(self, ring):
        phase = self.phase % 1
        return ring.root_of_unity(phase.numerator, phase.denominator)

    def _default_ring(self):
        den = (self.phase % 1).denominator
        if den <= 2 or self.body.ring != ZZ:
            return self.body.ring
        return cyclotomic(den)

    def expand(self, ring=None) -> Series3:
        """Раскрытие в Series3; полюс вдоль y = 1 даёт DivisibilityError."""
        ring = ring or self._default_ring()
        body = self.body if self.body.ring == ring else self.body.to_ring(ring)
        result = series_mul(Series3.monomial(self.prefactor, self._unit(ring), ring), body)
        positive = [((0, -k, 0), e) for k, e in self.y_factors if e > 0]
        negative = [((0, -k, 0), -e) for k, e in self.y_factors if e < 0]
        if positive:
            result = series_mul(result, product_expand(positive, None, None, ring=ring))
        if negative:
            result = series_exact_div(result, product_expand(negative, None, None, ring=ring))
        return result

    def agrees_with(self, other: 'SiegelSeries') -> bool:
        if self._structure() == other._structure():
            return self.body.agrees_with(other.body)
        return self.expand().agrees_with(other.expand())

    def is_one(self) -> bool:
        one = Series3.one(self.body.ring)
        return self._structure() == ((0, 0, 0), (), 0) and self.body.agrees_with(one)

    def to_json(self) -> dict:
        try:
            payload = self.expand().to_json()
        except (DivisibilityError, RingError):
            payload = self.body.to_json()
            payload["prefactor"] = list(self.prefactor)
            payload["y_factors"] = [list(f) for f in self.y_factors]
            payload["phase"] = str(self.phase)
        payload["weight2"] = self.weight2
        payload["character_order"] = self.character_order
        payload["index_t"] = self.index_t
        return payload


# --- экспоненциальный подъём ---

def abc_exponents(phi: JacobiForm) -> Tuple[Fraction, Fraction, Fraction]:
    """A = Σf(0,l)/24, B = Σ_{l>0} l·f(0,l)/2, C = Σ l²f(0,l)/4."""
    q0 = phi.q0()
    a = Fraction(sum(q0.values()), 24)
    b = sum((Fraction(ly, 4) * c for ly, c in q0.items() if ly > 0), Fraction(0)) / 2
    c = sum((Fraction(ly, 4) ** 2 * v for ly, v in q0.items()), Fraction(0)) / 4
    return a, b, c


def _units(value: Fraction, den: int, name: str) -> int:
    scaled = value * den
    if scaled.denominator != 1:
        raise RingError(f"Показатель {name} = {value} не представим в единицах 1/{den}")
    return int(scaled)


def required_qprec(t: int, qmax: int, smax: int) -> int:
    """Точность формы индекса t, достаточная для подъёма до q^qmax, s^smax."""
    return 24 * ((qmax - 1) * ((smax - 1) // t) + 1)


def exp_lift(phi: JacobiForm, qmax: int = DEFAULT_QMAX, smax: int = DEFAULT_SMAX) -> SiegelSeries:
    """q^A y^B s^C Π_{(n,l,m)>0} (1 - q^n y^l s^{tm})^{c(nm,l)}; тело до q^{<qmax}, s^{<smax}."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    _check(phi.is_integral_index() and phi.index2 > 0, 'index', "должен быть целым положительным")
    _check(phi.ring == ZZ, 'ring', "экспоненциальный подъём определён для целых коэффициентов")
    _check(qmax >= 1, 'qmax', "должно быть положительным")
    _check(smax >= 1, 'smax', "должно быть положительным")
    t = phi.index
    top_m = (smax - 1) // t
    needed = (qmax - 1) * top_m
    if phi.qprec is not None and needed >= integral_orders(phi.qprec):
        raise PrecisionError(
            f"Для подъёма до q^{qmax}, s^{smax} нужна строка q^{needed} формы индекса {t}, "
            f"известно порядков: {integral_orders(phi.qprec)}", needed=needed + 1)

    rows = phi.rows()
    factors = []
    for m in range(top_m + 1):
        for n in range(qmax):
            if n == 0 and m == 0:
                continue
            for ly, c in rows.get(24 * n * m, {}).items():
                if ly * ly > 16 * (4 * t * n * m + t * t):
                    raise ValidationError(f"Коэффициент при q^{n * m} y^{ly}/4 вне носителя слабой формы индекса {t}")
                factors.append(((24 * n, ly, 24 * t * m), c))
    body = product_expand(factors, 24 * qmax, 24 * smax)

    q0 = phi.q0()
    a, b, c = abc_exponents(phi)
    prefactor = (_units(a, 24, 'A'), _units(b, 4, 'B'), _units(c, 24, 'C'))
    total = sum(q0.values())
    logger.debug(f"Exp-Lift индекса {t}: префактор {prefactor}, множителей {len(factors)}")
    return SiegelSeries(
        body=body,
        prefactor=prefactor,
        y_factors=_factors((-ly, v) for ly, v in q0.items() if ly < 0),
        weight2=q0.get(0, 0),
        character_order=24 // gcd(24, total),
        index_t=t,
    )


def scale_z(phi: JacobiForm, k: int) -> JacobiForm:
    """φ(τ, kz): индекс умножается на k²."""
    return JacobiForm(phi.weight2, k * k * phi.index2, substitute_y(phi.series, k))


# --- именованные формы ---

def _named_source(name: str, qprec: int) -> JacobiForm:
    if name == 'Delta5':
        return generator('phi01', qprec)
    if name == 'Delta2':
        return generator('phi02', qprec)
    if name == 'Delta1':
        return generator('phi03', qprec)
    if name == 'DeltaHalf':
        return generator('phi04', qprec)
    if name == 'Delta11':
        return psi2_variantA(qprec)
    if name == 'D6':
        return genus_basis(3, 2, qprec)
    if name == 'Delta17':
        return genus_basis(3, 3, qprec)
    if name == 'Delta5_2z':
        return genus_basis(4, 2, qprec)
    if name == 'Delta12':
        return genus_basis(4, 3, qprec)
    if name == 'Delta23':
        return genus_basis(4, 4, qprec)
    if name == 'Phi3':
        return scale_z(generator('phi032', qprec), 2)
    if name == 'Phi5':
        return scale_z(generator('phi032', qprec) * generator('phi01', qprec), 2)
    raise ValidationError(f"Неизвестная форма Зигеля: {name}")


NAMED_INDEX = {'Delta5': 1, 'Delta2': 2, 'Delta1': 3, 'DeltaHalf': 4, 'Delta11': 2, 'D6': 3,
               'Delta17': 3, 'Delta5_2z': 4, 'Delta12': 4, 'Delta23': 4, 'Phi3': 6, 'Phi5': 10,
               'Delta7': 3}


def canonical_lift_name(name: str) -> str:
    canonical = SIEGEL_ALIASES.get(name, SIEGEL_ALIASES.get(name.lower()))
    if canonical is None:
        raise ValidationError(f"Неизвестная форма Зигеля: {name}. Доступные: {', '.join(NAMED_INDEX)}")
    return canonical


def named_lift(name: str, qmax: int = DEFAULT_QMAX, smax: int = DEFAULT_SMAX) -> SiegelSeries:
    """Δ5, Δ2, Δ1, Δ_{1/2}, Δ11, D6, Δ7 = Δ1·D6, Δ17, Δ12, Δ23, Φ3, Φ5 как Exp-Lift."""
    name = canonical_lift_name(name)
    if name == 'Delta7':
        return named_lift('Delta1', qmax, smax) * named_lift('D6', qmax, smax)
    # индекс исходной формы до подстановки z -> 2z
    base_t = {'Phi3': 6, 'Phi5': 10}.get(name, NAMED_INDEX[name])
    qprec = max(24, required_qprec(base_t, qmax, smax))
    logger.info(f"Подъём {name}: q < {qmax}, s < {smax}")
    return exp_lift(_named_source(name, qprec), qmax, smax)


# --- дивизоры Гумберта ---

@dataclass(frozen=True)
class HumbertDatum:
    a: int
    b: int
    D: int
    multiplicity: int

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "D": self.D, "multiplicity": self.multiplicity}


def reduced_coefficient(phi: JacobiForm, N: int, L: int):
    """f(N, L) через представителя с тем же 4tN - L² и l ≡ L mod 2t, |l| ≤ t."""
    t = phi.index
    norm = 4 * t * N - L * L
    if norm < -t * t:
        return 0
    l0 = L % (2 * t)
    if l0 > t:
        l0 -= 2 * t
    n0 = (norm + l0 * l0) // (4 * t)
    if n0 < 0:
        return 0
    if phi.qprec is not None and n0 >= integral_orders(phi.qprec):
        raise PrecisionError(f"Для f({N}, {L}) нужна строка q^{n0} формы", needed=n0 + 1)
    return phi.coeff(24 * n0, 4 * l0)


def humbert_multiplicity(phi: JacobiForm, a: int, b: int) -> int:
    """m_{D,b} = -Σ_{n>0} f(n²a, nb): кратность H_D(b) в дивизоре Exp-Lift(-φ)."""
    _check(phi.is_integral_index() and phi.index2 > 0, 'index', "должен быть целым положительным")
    t = phi.index
    D = b * b - 4 * t * a
    _check(D > 0, 'D', f"= b² - 4ta должно быть положительным, получено {D}")
    total = 0
    n = 1
    # при норме -n²D < -t² коэффициенты слабой формы равны нулю
    while n * n * D <= t * t:
        total += reduced_coefficient(phi, n * n * a, n * b)
        n += 1
    return -total


def lift_divisor(phi: JacobiForm) -> List[HumbertDatum]:
    """Примитивные H_D(b), 0 ≤ b ≤ t, с ненулевой кратностью в дивизоре Exp-Lift(φ)."""
    t = phi.index
    data = []
    for D in range(1, t * t + 1):
        for b in range(t + 1):
            if (b * b - D) % (4 * t):
                continue
            a = (b * b - D) // (4 * t)
            if gcd(gcd(a, b), t) != 1:
                continue
            multiplicity = -humbert_multiplicity(phi, a, b)
            if multiplicity:
                data.append(HumbertDatum(a, b, D, multiplicity))
    return data
