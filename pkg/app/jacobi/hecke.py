"""Операторы Гекке T₋(m) и T₀(2) на слабых формах веса 0."""
import logging
from math import isqrt

from sympy import divisors

from app.errors import PrecisionError, ValidationError, _check
from app.jacobi.forms import JacobiForm
from app.modular import kronecker
from app.rings import ZZ
from app.series import Series2

logger = logging.getLogger(__name__)


def integral_orders(qprec: int) -> int:
    """Число полностью известных целых порядков q при точности qprec (в 1/24)."""
    return -(-qprec // 24)


def hecke_Tminus(phi: JacobiForm, m: int) -> JacobiForm:
    """f_m(N, L) = m Σ_{a | (N, L, m)} a^{-1} f(N m / a², L / a); индекс умножается на m."""
    _check(m >= 1, 'm', f"должно быть положительным, получено {m}")
    _check(phi.weight2 == 0, 'weight', "оператор T₋(m) определён здесь для веса 0")
    t = phi.index
    _check(phi.ring == ZZ, 'ring', "должно быть ZZ")
    orders = integral_orders(phi.qprec)
    qprec = 24 * ((orders - 1) // m + 1)

    out = {}
    for (nq, ly), c in phi.series.terms.items():
        if nq % 24:
            raise ValidationError(f"Форма целого индекса {t} содержит дробный q-показатель {nq}/24")
        n_src, l_src = nq // 24, ly // 4
        for a in divisors(m):
            a = int(a)
            if (n_src * a * a) % m:
                continue
            n = n_src * a * a // m
            if n % a or 24 * n >= qprec:
                continue
            key = (24 * n, 4 * a * l_src)
            out[key] = out.get(key, 0) + (m // a) * c
    logger.debug(f"T₋({m}): индекс {t} -> {t * m}, известно {qprec // 24} порядков q")
    return JacobiForm(0, phi.index2 * m, Series2(out, qprec))


def norm_table(phi: JacobiForm) -> dict:
    """Коэффициенты формы как функция нормы 4tn − l²; проверка, что зависимость только от нормы."""
    t = phi.index
    table = {}
    for (nq, ly), c in phi.series.terms.items():
        norm = 4 * t * (nq // 24) - (ly // 4) ** 2
        if table.setdefault(norm, c) != c:
            raise ValidationError(
                f"Коэффициенты формы зависят не только от нормы: 4tn−l² = {norm} даёт {table[norm]} и {c}"
            )
    return table


def _norm_lookup(phi: JacobiForm, norm: int, orders: int):
    """g(D) по известным коэффициентам; None для нецелых D трактуется как 0 вызывающим."""
    t = phi.index
    best = None
    for l in range(-t, t + 1):
        if (norm + l * l) % (4 * t) == 0:
            n = (norm + l * l) // (4 * t)
            if best is None or n < best[0]:
                best = (n, l)
    if best is None or best[0] < 0:
        return 0
    n, l = best
    if n >= orders:
        raise PrecisionError(f"Коэффициент нормы {norm} требует порядка q^{n}", needed=n + 1)
    return phi.coeff(24 * n, 4 * l)


def hecke_T0_2(phi: JacobiForm) -> JacobiForm:
    """g₂(N) = 8 g(4N) + 2 (−N/2) g(N) + g(N/4), применённое по нормам."""
    _check(phi.weight2 == 0, 'weight', "оператор T₀(2) определён здесь для веса 0")
    t = phi.index
    _check(t >= 1, 'index', "должен быть положительным")
    table = norm_table(phi)
    orders = integral_orders(phi.qprec)
    out_orders = max(0, (orders - 1 - t // 4) // 4 + 1)
    if not table:
        return JacobiForm(0, phi.index2, Series2({}, 24 * out_orders))
    lowest = min(table)

    def g(norm):
        return _norm_lookup(phi, norm, orders)

    out = {}
    for n in range(out_orders):
        bound = 4 * t * n - 4 * min(lowest, 0)
        for l in range(-isqrt(bound), isqrt(bound) + 1):
            norm = 4 * t * n - l * l
            value = 8 * g(4 * norm) + 2 * kronecker(-norm, 2) * g(norm)
            if norm % 4 == 0:
                value += g(norm // 4)
            if value:
                out[(24 * n, 4 * l)] = value
    return JacobiForm(0, phi.index2, Series2(out, 24 * out_orders))
