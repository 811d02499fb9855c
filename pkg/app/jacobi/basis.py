"""Базис ψ_{0,m}^{(n)} модуля слабых форм индекса m и разложение по генераторам.

Каждая форма несёт многочлен от Φ1..Φ4; деления выполняются над нормальной
формой многочлена и над рядом одновременно.
"""
import logging
from functools import lru_cache
from math import gcd
from typing import Dict, Optional

from app.errors import DivisibilityError, IdentityError, PrecisionError, ValidationError, _check
from app.jacobi.forms import JacobiForm, constant_form, generator, zero_form
from app.jacobi.hecke import hecke_Tminus, integral_orders
from app.jacobi.polynomial import GeneratorPolynomial
from app.rings import ZZ
from app.series import series_exact_div

logger = logging.getLogger(__name__)

_BASE_INDICES = (1, 2, 3, 4, 6, 8, 12)

# q⁰-члены нормированного базиса индекса 5 по степеням y (симметричные): {l: c}
_INDEX5_Q0 = {
    1: {1: 5, 0: 2},
    2: {2: 1, 1: 1, 0: 8},
    3: {3: 1, 1: 1, 0: 20},
    4: {4: 1, 1: -1, 0: 36},
    5: {5: 1, 0: 58},
}


def _phi(k: int, qprec: int) -> JacobiForm:
    return generator(f'phi0{k}', qprec)


def linear_coefficient(m: int) -> int:
    """Коэффициент при y у ψ_{0,m}^{(1)}: m / (12, m)."""
    return m // gcd(m, 12)


def symmetric_q0(values: Dict[int, int]) -> Dict[int, int]:
    """{l: c} при l >= 0 -> симметричная строка q⁰ в единицах ly."""
    row = {}
    for l, c in values.items():
        row[4 * l] = c
        row[-4 * l] = c
    return {ly: c for ly, c in row.items() if c}


# --- ψ^{(1)} ---

@lru_cache(maxsize=None)
def psi_tilde(m: int, qprec: int) -> JacobiForm:
    """ψ̃_m = (12, m)·ψ_m^{(1)}, q⁰ = m y^{±1} + (12 − 2m)."""
    if m in _BASE_INDICES:
        return gcd(m, 12) * _phi(m, qprec)
    return gcd(m, 12) * psi_one(m, qprec)


def _combination(m: int, qprec: int, kind: str) -> JacobiForm:
    def t(k):
        return psi_tilde(m - k, qprec)

    def phi(k):
        return _phi(k, qprec)

    if kind == 'I':
        return t(4) * phi(4) + t(2) * phi(2) - 2 * t(3) * phi(3)
    if kind == 'III':
        return 2 * t(3) * phi(3) + t(6) * phi(6) - 3 * t(4) * phi(4)
    if kind == 'IV':
        return t(12) * phi(12) + t(4) * phi(4) - t(8) * phi(8)
    raise ValidationError(f"Неизвестный рецепт {kind}")


@lru_cache(maxsize=None)
def psi_one(m: int, qprec: int) -> JacobiForm:
    """ψ_m^{(1)}: q⁰ = (1/(12,m))(m y + (12 − 2m) + m y^{-1})."""
    _check(m >= 1, 'm', f"должно быть положительным, получено {m}")
    if m in _BASE_INDICES:
        return _phi(m, qprec)
    d = gcd(m, 12)
    logger.debug(f"ψ^(1)_{m}: рецепт для (12, m) = {d}")
    if d in (1, 2):
        return _combination(m, qprec, 'I').divide_scalar(d)
    if d in (3, 6):
        return _combination(m, qprec, 'III').divide_scalar(d)
    if d == 4:
        return _combination(m, qprec, 'IV').divide_scalar(4)
    # (12, m) = 12: разность форм с q⁰ = 3T и 2T даёт T
    return _combination(m, qprec, 'IV').divide_scalar(4) - _combination(m, qprec, 'III').divide_scalar(6)


# --- ψ^{(2)} ---

def psi2_variantA(qprec: int) -> JacobiForm:
    """φ1² − 20φ2, q⁰ = y^{±2} + 22."""
    return _phi(1, qprec) ** 2 - 20 * _phi(2, qprec)


def psi2_variantB(qprec: int) -> JacobiForm:
    """φ1² − 24φ2, q⁰ = y² − 4y + 6 − 4y⁻¹ + y⁻²."""
    return _phi(1, qprec) ** 2 - 24 * _phi(2, qprec)


def _psi_two(m: int, qprec: int) -> JacobiForm:
    if m == 2:
        return psi2_variantB(qprec)
    if m == 3:
        return _phi(1, qprec) * _phi(2, qprec) - 18 * _phi(3, qprec)
    if m == 4:
        return _phi(1, qprec) * _phi(3, qprec) - 16 * _phi(4, qprec)
    return psi_tilde(m - 3, qprec) * _phi(3, qprec) - psi_tilde(m - 4, qprec) * _phi(4, qprec) - psi_tilde(m, qprec)


# --- базис ---

@lru_cache(maxsize=None)
def basis_psi(m: int, n: int, qprec: int) -> JacobiForm:
    """ψ_{0,m}^{(n)}; при n >= 3 q⁰ приведён: y^n + ... с нулями при y^k (2 <= k < n)
    и коэффициентом при y в системе вычетов (−p/2, p/2], p = m/(12,m)."""
    _check(m >= 1, 'm', f"должно быть положительным, получено {m}")
    _check(1 <= n <= m, 'n', f"должно лежать в 1..{m}, получено {n}")
    if n == 1:
        return psi_one(m, qprec)
    if n == 2:
        return _psi_two(m, qprec)
    if n == m:
        raw = _phi(1, qprec) ** m
    elif n == m - 1:
        raw = _phi(1, qprec) ** (m - 2) * _phi(2, qprec)
    else:
        raw = _phi(3, qprec) * basis_psi(m - 3, n - 1, qprec)
    return _canonicalize(raw, m, n, qprec)


def _canonicalize(form: JacobiForm, m: int, n: int, qprec: int) -> JacobiForm:
    lead = form.q0().get(4 * n, 0)
    if lead != 1:
        raise ValidationError(f"ψ^({n})_{m}: старший коэффициент q⁰ равен {lead}, ожидалась 1")
    for k in range(n - 1, 1, -1):
        c = form.q0().get(4 * k, 0)
        if c:
            form = form - c * basis_psi(m, k, qprec)
    p = linear_coefficient(m)
    c1 = form.q0().get(4, 0)
    r = c1 % p
    if 2 * r > p:
        r -= p
    if c1 != r:
        form = form - ((c1 - r) // p) * psi_one(m, qprec)
    return form


def basis_matrix(m: int, qprec: int = 24) -> list:
    """Строки q⁰ базиса индекса m: коэффициенты при y^m..y^{-m}."""
    rows = []
    for n in range(1, m + 1):
        q0 = basis_psi(m, n, qprec).q0()
        rows.append([q0.get(4 * l, 0) for l in range(m, -m - 1, -1)])
    return rows


# --- нормированный базис для эллиптических родов ---

def genus_basis(m: int, n: int, qprec: int) -> JacobiForm:
    """Базис с q⁰ вида y^{±n} + ... + const, используемый в эллиптических родах."""
    _check(1 <= n <= m, 'n', f"должно лежать в 1..{m}, получено {n}")

    def phi(k):
        return _phi(k, qprec)

    if m <= 4 and n == 1:
        return phi(m)
    if m == 2:
        return psi2_variantA(qprec)
    if m == 3:
        if n == 2:
            return phi(1) * phi(2) - 15 * phi(3)
        return phi(1) ** 3 - 30 * phi(1) * phi(2) + 117 * phi(3)
    if m == 4:
        psi42 = phi(1) * phi(3) - 12 * phi(4)
        if n == 2:
            return psi42
        if n == 3:
            return phi(2) * psi2_variantA(qprec) - 4 * psi42 - 24 * phi(4)
        source_prec = 24 * (2 * (integral_orders(qprec) - 1) + 1)
        lifted = hecke_Tminus(psi2_variantA(source_prec), 2).truncate(qprec)
        return lifted - 2 * psi42
    if m == 5:
        return form_from_q0(5, symmetric_q0(_INDEX5_Q0[n]), qprec)
    raise ValidationError(f"Нормированный базис задан только для индексов 1..5, получено {m}")


def form_from_q0(m: int, q0: Dict[int, int], qprec: int,
                 xi6_coefficient: Optional[int] = None) -> JacobiForm:
    """Единственная слабая форма индекса m < 6 с заданным q⁰ (ключи ly).

    При m = 6 неоднозначность c·ξ_{0,6} снимает xi6_coefficient.
    """
    _check(m >= 0, 'm', "должно быть неотрицательным")
    if m >= 6:
        _check(m == 6 and xi6_coefficient is not None, 'xi6_coefficient',
               "обязателен при индексе 6 (q⁰ не определяет форму); индексы > 6 не поддерживаются")
    rest = {ly: c for ly, c in q0.items() if c}
    if m == 0:
        c = rest.pop(0, 0)
        if rest:
            raise IdentityError(f"Форма индекса 0 постоянна, q⁰ содержит {sorted(rest)}")
        return constant_form(c, qprec)
    total = zero_form(0, 2 * m, qprec).with_poly(GeneratorPolynomial.constant(0))
    for n in range(m, 0, -1):
        c = rest.get(4 * n, 0)
        if n == 1:
            p = linear_coefficient(m)
            if c % p:
                raise DivisibilityError(
                    f"Коэффициент {c} при y в q⁰ индекса {m} должен делиться на {p}", key=(0, 4)
                )
            c //= p
        if not c:
            continue
        psi = basis_psi(m, n, qprec)
        total = total + c * psi
        for ly, v in psi.q0().items():
            value = rest.get(ly, 0) - c * v
            if value:
                rest[ly] = value
            else:
                rest.pop(ly, None)
    if rest:
        raise IdentityError(
            f"q⁰-член не лежит в решётке слабых форм индекса {m}: остаток "
            f"{ {ly / 4: c for ly, c in sorted(rest.items())} }"
        )
    if xi6_coefficient:
        total = total + xi6_coefficient * generator('xi06', qprec)
    return total


# --- деления ---

def divide_by_xi06(phi: JacobiForm) -> JacobiForm:
    """Частное по ξ_{0,6} формы с нулевым q⁰-членом; индекс уменьшается на 6."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    m = phi.index
    _check(m >= 6, 'index', f"должен быть не меньше 6, получено {m}")
    _check(not phi.q0(), 'q0', "должен быть нулевым для деления на ξ_{0,6}")
    _check(phi.ring == ZZ, 'ring', "должно быть ZZ")
    xi = generator('xi06', max(24, phi.qprec))
    quotient = series_exact_div(phi.series, xi.series)
    return JacobiForm(0, phi.index2 - 12, quotient)


def halfint_factor(phi: JacobiForm) -> JacobiForm:
    """Деление на φ_{0,3/2} (чётный вес) или φ_{−1,1/2} (нечётный вес)."""
    _check(phi.index2 % 2 == 1, 'index', f"должен быть полуцелым, получено {phi.index2}/2")
    _check(phi.weight2 % 2 == 0, 'weight', f"должен быть целым, получено {phi.weight2}/2")
    name = 'phi032' if phi.weight2 % 4 == 0 else 'phim112'
    divisor = generator(name, max(24, phi.qprec))
    quotient = series_exact_div(phi.series, divisor.series.to_ring(phi.ring))
    return JacobiForm(phi.weight2 - divisor.weight2, phi.index2 - divisor.index2, quotient)


# --- разложение по генераторам ---

def decompose(phi: JacobiForm) -> GeneratorPolynomial:
    """Многочлен от Φ1..Φ4, значение которого совпадает с φ до точности φ."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    _check(phi.ring == ZZ, 'ring', "должно быть ZZ")
    m = phi.index
    needed = 24 * (m // 6 + 2)
    if phi.qprec is None or phi.qprec < needed:
        raise PrecisionError(
            f"Разложение формы индекса {m} требует qprec >= {needed}, получено {phi.qprec}", needed=needed
        )
    poly = _decompose(phi)
    logger.debug(f"Разложение формы индекса {m}: {poly}")
    return poly


def _decompose(phi: JacobiForm) -> GeneratorPolynomial:
    m = phi.index
    if phi.qprec <= 0:
        raise PrecisionError(f"Точность исчерпана на индексе {m}", needed=24)
    q0 = phi.q0()
    if m == 0:
        rest = phi - constant_form(q0.get(0, 0), phi.qprec)
        if not rest.series.is_zero():
            raise IdentityError("Форма индекса 0 не постоянна")
        return GeneratorPolynomial.constant(q0.get(0, 0))

    poly = GeneratorPolynomial.constant(0)
    rest = phi
    for n in range(m, 0, -1):
        c = rest.q0().get(4 * n, 0)
        if n == 1:
            p = linear_coefficient(m)
            if c % p:
                raise DivisibilityError(
                    f"Форма не лежит в J^Z_0,{m}: коэффициент {c} при y должен делиться на {p}", key=(0, 4)
                )
            c //= p
        if c:
            psi = basis_psi(m, n, phi.qprec)
            rest = rest - c * psi
            poly = poly + c * psi.poly
    if rest.q0():
        raise IdentityError(f"q⁰-член формы индекса {m} не раскладывается по базису: остаток {rest.q0()}")
    if rest.series.is_zero():
        return poly
    if m < 6:
        raise IdentityError(f"Форма индекса {m} < 6 с нулевым q⁰-членом должна быть нулевой")
    quotient = divide_by_xi06(rest)
    xi_poly = generator('xi06', 24).poly
    return poly + xi_poly * _decompose(quotient)
