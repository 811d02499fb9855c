"""Специализации слабых форм: точки кручения z = 1/N, центр z = −(τ+1)/2, ряд Тейлора по z."""
import logging
from fractions import Fraction
from math import factorial, isqrt
from typing import List, Optional, Tuple

from app.errors import PrecisionError, ValidationError, _check
from app.jacobi.forms import JacobiForm, generator
from app.modular import g2_series
from app.rings import QQ, CyclotomicInteger
from app.series import Series2, _pmin, monomial_substitute

logger = logging.getLogger(__name__)

TORSION_ORDERS = (1, 2, 3, 4, 6)


def specialize_torsion(phi: JacobiForm, N: int, qprec: Optional[int] = None) -> Series2:
    """φ(τ, 1/N): y -> ζ_N в Z[ζ_N] с проекцией на Z."""
    _check(N in TORSION_ORDERS, 'N', f"должно быть одним из {TORSION_ORDERS}, получено {N}")
    _check(phi.is_integral_index(), 'index', "должен быть целым")
    if not phi.is_symmetric():
        raise ValidationError("Специализация в точке кручения требует f(n,l) = f(n,−l)")
    qprec = _pmin(phi.qprec, qprec)
    values = {}
    for (nq, ly), c in phi.series.terms.items():
        if qprec is not None and nq >= qprec:
            continue
        root = CyclotomicInteger.root(N, ly // 4)
        values[nq] = values.get(nq, CyclotomicInteger.from_int(N, 0)) + root * c
    out = {}
    for nq, value in values.items():
        rational = value.rational_part()
        if rational is None:
            raise ValidationError(f"Значение при q^{nq}/24 в точке 1/{N} не рационально: {value.coeffs}")
        out[(nq, 0)] = rational
    return Series2(out, qprec)


def specialize_center(phi: JacobiForm, qprec: Optional[int] = None) -> Series2:
    """φ̂_m = q^{m/4} φ(τ, −(τ+1)/2): y^l -> (−1)^l q^{l/2}."""
    _check(phi.is_integral_index(), 'index', "должен быть целым: полуцелый индекс требует корней 8-й степени")
    m = phi.index
    orders = -(-phi.qprec // 24)
    # младший неизвестный показатель: n − sqrt(4mn + m²)/2 + m/4 при n = orders
    disc = 4 * m * orders + m * m
    root = isqrt(disc)
    if root * root < disc:
        root += 1
    bound = 24 * orders - 12 * root + 6 * m
    qprec = _pmin(bound, qprec)
    return monomial_substitute(
        phi.series,
        lambda k: (k[0] + 3 * k[1] + 6 * m, 0),
        twist=lambda k: -1 if (k[1] // 4) % 2 else 1,
        qprec=qprec,
    )


def taylor_coeffs(phi: JacobiForm, count: int, qprec: Optional[int] = None) -> List[Series2]:
    """Коэффициенты f_n(τ) разложения exp(−8π²m G2 z²)·φ(τ,z) = Σ f_n (2πi z)^n над Q."""
    _check(count >= 0, 'count', "должно быть неотрицательным")
    _check(phi.is_integral_index(), 'index', "должен быть целым")
    m = phi.index
    qprec = _pmin(phi.qprec, qprec)
    series = phi.series.to_ring(QQ)

    moments = []
    for j in range(count):
        terms = {}
        for (nq, ly), c in series.terms.items():
            l = ly // 4
            if l or j == 0:
                terms[(nq, 0)] = terms.get((nq, 0), 0) + c * Fraction(l ** j, factorial(j))
        moments.append(Series2(terms, qprec, ring=QQ))

    twist = g2_series(qprec).scale(2 * m)
    powers = [Series2.one(QQ, qprec=qprec)]
    for k in range(1, count // 2 + 1):
        powers.append((powers[-1] * twist).divide_scalar(k))

    result = []
    for n in range(count):
        total = Series2({}, qprec, ring=QQ)
        for k in range(n // 2 + 1):
            total = total + powers[k] * moments[n - 2 * k]
        result.append(total.truncate(qprec))
    return result


def weak_form_residuals(phi: JacobiForm) -> Tuple[object, object]:
    """r1 = mΣf(0,l) − 6Σl²f(0,l), r2 = 24mΣf(0,l) − Σ(m − 6l²)f(1,l)."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    if phi.qprec is not None and phi.qprec <= 24:
        raise PrecisionError("Второе тождество требует известной строки q¹", needed=2)
    m = Fraction(phi.index2, 2)
    row0 = phi.q0()
    row1 = phi.row(24)
    total0 = sum(row0.values())
    r1 = m * total0 - 6 * sum(Fraction(ly, 4) ** 2 * c for ly, c in row0.items())
    r2 = 24 * m * total0 - sum((m - 6 * Fraction(ly, 4) ** 2) * c for ly, c in row1.items())
    return _plain(r1), _plain(r2)


def _plain(value: Fraction):
    return int(value) if value.denominator == 1 else value


def alpha(qprec: int) -> Series2:
    """α(τ) = φ_{0,1}(τ, 1/2)."""
    return specialize_torsion(generator('phi01', qprec), 2)


def beta(qprec: int) -> Series2:
    """β(τ) = φ_{0,2}(τ, 1/3)."""
    return specialize_torsion(generator('phi02', qprec), 3)


def gamma(qprec: int) -> Series2:
    """γ(τ) = φ_{0,3}(τ, 1/4) / 2."""
    return specialize_torsion(generator('phi03', qprec), 4).divide_scalar(2)
