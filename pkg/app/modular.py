"""Ряды от одной переменной q: символ Кронекера, степени эта, G2, тэта-константы."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from sympy import divisor_sigma
from sympy.ntheory import jacobi_symbol

from app.rings import QQ
from app.series import Series2, product_expand

logger = logging.getLogger(__name__)


def kronecker(a: int, n: int) -> int:
    if n == 0:
        return 1 if abs(a) == 1 else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5) and twos % 2:
            sign = -sign
    if n == 1:
        return sign
    return sign * int(jacobi_symbol(a % n, n))


def eta_power(r: int, qprec: int) -> Series2:
    """η(τ)^r = q^{r/24} Π(1 - q^n)^r."""
    bound = qprec - r
    body = product_expand((((24 * n, 0), r) for n in range(1, max(bound, 0) // 24 + 2)), bound, arity=2)
    return _shift(body, r)


def _shift(series: Series2, nq: int) -> Series2:
    return Series2({(k[0] + nq, k[1]): c for k, c in series.terms.items()},
                   None if series.qprec is None else series.qprec + nq, ring=series.ring)


@dataclass(frozen=True)
class EtaQuotientSpec:
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for scale, power in self.factors:
            if scale <= 0 or power == 0:
                raise ValueError(f"Некорректный множитель эта-частного: η({scale}τ)^{power}")

    @property
    def leading(self) -> int:
        return sum(scale * power for scale, power in self.factors)

    def negated(self) -> 'EtaQuotientSpec':
        return EtaQuotientSpec(tuple((scale, -power) for scale, power in self.factors))


def eta_quotient(spec: EtaQuotientSpec, qprec: int) -> Series2:
    """Π η(scale·τ)^power, старший показатель Σ scale·power / 24."""
    shift = spec.leading
    bound = qprec - shift
    factors = []
    for scale, power in spec.factors:
        step = 24 * scale
        factors.extend(((step * n, 0), power) for n in range(1, max(bound, 0) // step + 2))
    return _shift(product_expand(factors, bound, arity=2), shift)


def g2_series(qprec: int) -> Series2:
    terms = {(0, 0): Fraction(-1, 24)}
    for n in range(1, (qprec - 1) // 24 + 1):
        terms[(24 * n, 0)] = Fraction(int(divisor_sigma(n, 1)))
    return Series2(terms, qprec, ring=QQ)


def theta_constant(a: int, b: int, qprec: int) -> Series2:
    """ϑ_ab(τ) = Σ (-1)^{bn} q^{(n + a/2)^2 / 2}; показатель 3(2n + a)^2 в единицах 1/24."""
    if (a, b) == (1, 1):
        raise ValueError("ϑ_11(τ) тождественно равна нулю")
    terms = {}
    v = a
    while 3 * v * v < qprec:
        for odd in {v, -v}:
            n = (odd - a) // 2
            key = (3 * odd * odd, 0)
            terms[key] = terms.get(key, 0) + (-1) ** (b * n % 2)
        v += 2
    return Series2(terms, qprec)
