"""Явные ряды Фурье: арифметические подъёмы Δ2, Δ1, тэта-константы рода 2 и тождества с Exp-Lift."""
import logging
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import List, Tuple

from sympy import divisors

from app.errors import ValidationError, _check
from app.jacobi.forms import generator
from app.jacobi.basis import psi2_variantA
from app.mappings import ARITHMETIC_LIFTS, DEFAULT_QMAX, DEFAULT_SMAX
from app.modular import kronecker
from app.reports import CheckReport
from app.rings import GAUSSIAN
from app.series import Series3, series_mul, substitute_s, substitute_y
from app.siegel.lifts import SiegelSeries, exp_lift, required_qprec, scale_z

logger = logging.getLogger(__name__)

EVEN_CHARACTERISTICS = tuple(
    (a, b) for a in product((0, 1), repeat=2) for b in product((0, 1), repeat=2)
    if (a[0] * b[0] + a[1] * b[1]) % 2 == 0
)


def _divisor_sum(g: int, kron: int) -> int:
    return sum(kronecker(kron, a) for a in divisors(g))


def _delta2_terms(qprec: int, sprec: int) -> dict:
    """Σ N(-4/Nl) Σ_{a|(n,l,m)} (-4/a) q^{n/4} y^{l/2} s^{m/2}, n,m ≡ 1 mod 4, 2nm - l² = N²."""
    terms = {}
    for n in range(1, qprec // 6 + 1, 4):
        if 6 * n >= qprec:
            break
        for m in range(1, sprec // 12 + 1, 4):
            if 12 * m >= sprec:
                break
            l = 0
            while l * l < 2 * n * m:
                for sl in {l, -l}:
                    N = isqrt(2 * n * m - l * l)
                    if N * N != 2 * n * m - l * l:
                        continue
                    c = N * kronecker(-4, N * sl) * _divisor_sum(gcd(gcd(n, abs(sl)), m), -4)
                    if c:
                        terms[(6 * n, 2 * sl, 12 * m)] = c
                l += 1
    return terms


def _delta1_terms(qprec: int, sprec: int) -> dict:
    """Σ (-4/l)(12/M) Σ_{a|(n,l,m)} (-3/a) q^{n/6} y^{l/2} s^{m/2}, n,m ≡ 1 mod 6, 4nm - 3l² = M²."""
    terms = {}
    for n in range(1, qprec // 4 + 1, 6):
        if 4 * n >= qprec:
            break
        for m in range(1, sprec // 12 + 1, 6):
            if 12 * m >= sprec:
                break
            l = 0
            while 3 * l * l < 4 * n * m:
                for sl in {l, -l}:
                    M = isqrt(4 * n * m - 3 * l * l)
                    if M * M != 4 * n * m - 3 * l * l:
                        continue
                    c = kronecker(-4, sl) * kronecker(12, M) * _divisor_sum(gcd(gcd(n, abs(sl)), m), -3)
                    if c:
                        terms[(4 * n, 2 * sl, 12 * m)] = c
                l += 1
    return terms


def arithmetic_lift(name: str, qmax: int = DEFAULT_QMAX, smax: int = None) -> SiegelSeries:
    """Δ2 = Lift(η³ϑ) или Δ1 = Lift(ηϑ) прямым перебором точек решётки до q^{<qmax}, s^{<smax}."""
    canonical = ARITHMETIC_LIFTS.get(name, ARITHMETIC_LIFTS.get(name.lower()))
    _check(canonical in ('Delta2', 'Delta1'), 'name', f"должно быть Delta2 или Delta1, получено {name}")
    smax = qmax if smax is None else smax
    _check(qmax >= 1 and smax >= 1, 'bound', "должна быть положительной")
    qprec, sprec = 24 * qmax, 24 * smax
    if canonical == 'Delta2':
        terms, weight2, order, t = _delta2_terms(qprec, sprec), 4, 4, 2
    else:
        terms, weight2, order, t = _delta1_terms(qprec, sprec), 2, 6, 3
    logger.info(f"Арифметический подъём {canonical}: {len(terms)} членов")
    return SiegelSeries(body=Series3(terms, qprec, sprec), weight2=weight2, character_order=order, index_t=t)


def delta_half_theta(qmax: int = DEFAULT_QMAX, smax: int = None) -> SiegelSeries:
    """Δ_{1/2} = ½ Σ (-4/n)(-4/m) q^{n²/8} y^{nm/4} s^{m²/8}."""
    smax = qmax if smax is None else smax
    qprec, sprec = 24 * qmax, 24 * smax
    doubled = {}
    n = 1
    while 3 * n * n < qprec:
        m = 1
        while 3 * m * m < sprec:
            for sn, sm in product((n, -n), (m, -m)):
                key = (3 * n * n, sn * sm, 3 * m * m)
                doubled[key] = doubled.get(key, 0) + kronecker(-4, sn) * kronecker(-4, sm)
            m += 2
        n += 2
    body = Series3(doubled, qprec, sprec).divide_scalar(2)
    return SiegelSeries(body=body, weight2=1, character_order=8)


def delta_half_substitutions(qmax: int = 2, smax: int = 2, max_power: int = 8) -> List[Tuple[int, int]]:
    """Подстановки y -> y^j, s -> s^k, переводящие тэта-сумму Δ_{1/2} в Exp-Lift(φ_{0,4})."""
    lifted = exp_lift(generator('phi04', max(24, required_qprec(4, qmax, smax))), qmax, smax).expand()
    theta = delta_half_theta(qmax, 4 * smax).body
    found = []
    for j in range(1, max_power + 1):
        for k in range(1, max_power + 1):
            candidate = substitute_s(substitute_y(theta, j), k)
            if candidate.agrees_with(lifted):
                found.append((j, k))
    logger.info(f"Подстановки для Δ_1/2: {found}")
    return found


def siegel_theta_constant(a: Tuple[int, int], b: Tuple[int, int], qmax: int = DEFAULT_QMAX,
                          smax: int = None) -> SiegelSeries:
    """Θ_{a,b}(Z) = Σ_{n∈Z²} exp(πi (n+a/2)ᵀZ(n+a/2) + 2πi (n+a/2)ᵀ b/2)."""
    a, b = tuple(a), tuple(b)
    _check(len(a) == 2 and len(b) == 2 and set(a + b) <= {0, 1}, 'characteristic',
           "должна состоять из двух пар нулей и единиц")
    if (a[0] * b[0] + a[1] * b[1]) % 2:
        raise ValidationError(f"Характеристика {a},{b} нечётна: Θ тождественно равна нулю")
    smax = qmax if smax is None else smax
    qprec, sprec = 24 * qmax, 24 * smax
    terms = {}
    u = a[0]
    while 3 * u * u < qprec:
        v = a[1]
        while 3 * v * v < sprec:
            for su, sv in {(x, w) for x in (u, -u) for w in (v, -v)}:
                # su = 2n1 + a1, sv = 2n2 + a2
                sign = (-1) ** (((su * b[0] + sv * b[1]) // 2) % 2)
                key = (3 * su * su, su * sv, 3 * sv * sv)
                terms[key] = terms.get(key, 0) + sign
            v += 2
        u += 2
    return SiegelSeries(body=Series3(terms, qprec, sprec), weight2=1)


def theta_product_delta5_squared(qmax: int = 2, smax: int = None) -> SiegelSeries:
    """2^{-12} Π Θ_{a,b}² по десяти чётным характеристикам."""
    smax = qmax if smax is None else smax
    total = Series3.one()
    for a, b in EVEN_CHARACTERISTICS:
        theta = siegel_theta_constant(a, b, qmax + 1, smax + 1).body
        total = series_mul(total, series_mul(theta, theta))
    return SiegelSeries(body=total.divide_scalar(2 ** 12), weight2=10)


# --- тождества ---

def delta11_identity_check(qmax: int = 2, smax: int = 3) -> CheckReport:
    """Δ11 = Δ5(Z)·Δ5(τ,2z,4ω)·Δ5(τ,z,ω+1/2)·Δ2^{-2} с точностью до единицы кольца Z[i]."""
    report = CheckReport('Тождество для Δ11')
    qprec = max(24, required_qprec(1, qmax, smax))
    delta5 = exp_lift(generator('phi01', qprec), qmax, smax)
    delta2 = exp_lift(generator('phi02', qprec), qmax, smax)
    delta11 = exp_lift(psi2_variantA(qprec), qmax, smax)

    rhs = delta5 * delta5.substitute(2, 4) * delta5.shift_half_omega() * delta2 ** -2
    unit = (rhs.phase - delta11.phase) % 1
    report.add('префакторы совпадают', rhs.prefactor == delta11.prefactor,
               lhs=delta11.prefactor, rhs=rhs.prefactor)
    report.add('множители (1 - y^-k) совпадают', rhs.y_factors == delta11.y_factors,
               lhs=delta11.y_factors, rhs=rhs.y_factors)
    report.add('тела рядов совпадают', rhs.body.agrees_with(delta11.body), qmax=qmax, smax=smax)
    report.add('множитель-единица равен i', unit == Fraction(1, 4), unit=f"e^(2πi·{unit})")

    i = GAUSSIAN.root_of_unity(1, 4)
    lhs_gauss = delta11.expand(GAUSSIAN).scale(i)
    report.add('i·Δ11 = правая часть в Z[i]', lhs_gauss.agrees_with(rhs.expand(GAUSSIAN)))
    return report.finish()


def phi3_squared_check(qmax: int = 2, smax: int = 7) -> CheckReport:
    """Φ3² = Exp-Lift(3φ3² - 2φ2φ4) / Exp-Lift(5φ3² - 4φ2φ4): на уровне Якоби и в малом окне."""
    report = CheckReport('Тождество для Φ3²')
    qprec = max(24, required_qprec(6, qmax, smax))
    phi2, phi3, phi4 = (generator(f'phi0{k}', qprec) for k in (2, 3, 4))
    numerator = 3 * phi3 ** 2 - 2 * phi2 * phi4
    denominator = 5 * phi3 ** 2 - 4 * phi2 * phi4
    doubled = scale_z(generator('phi032', qprec), 2)
    report.add('2φ_{0,3/2}(τ,2z) = (3φ3² - 2φ2φ4) - (5φ3² - 4φ2φ4)',
               (doubled * 2).agrees_with(numerator - denominator))
    report.add('φ_{0,3/2}(τ,2z) = φ_{0,6}', doubled.agrees_with(generator('phi06', qprec)))

    phi3_lift = exp_lift(doubled, qmax, smax)
    quotient = exp_lift(numerator, qmax, smax) * exp_lift(denominator, qmax, smax) ** -1
    report.add('Φ3² = Exp-Lift(числитель)/Exp-Lift(знаменатель)', (phi3_lift ** 2).agrees_with(quotient),
               qmax=qmax, smax=smax)
    return report.finish()
