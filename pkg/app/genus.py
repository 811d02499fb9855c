"""Эллиптические роды CY-многообразий, χ_y-данные и проверки делимости."""
import logging
from fractions import Fraction
from typing import List, Optional, Union

from app.errors import DivisibilityError, IdentityError, ValidationError, _check
from app.jacobi.basis import form_from_q0
from app.jacobi.forms import JacobiForm, generator
from app.jacobi.special import alpha, beta, gamma, specialize_torsion
from app.modular import EtaQuotientSpec, eta_quotient, theta_constant
from app.models import CYInvariants
from app.reports import CheckReport
from app.series import Series2, monomial_substitute, series_exact_div

logger = logging.getLogger(__name__)

# (модуль константы, модуль хвоста q^{>=1}) по остатку индекса
HALF_PATTERNS = {0: (1, 2 ** 13), 1: (8, 2 ** 8), 2: (2, 2 ** 12), 3: (16, 2 ** 9)}
THIRD_PATTERNS = {0: (1, 3 ** 6), 1: (9, 3 ** 4), 2: (3, 3 ** 3)}
QUARTER_PATTERNS = {2: (4, 2 ** 5), 3: (2, 2 ** 3)}

# именованные соотношения: коэффициенты при χ_0..χ_{d/2-1} для (−1)^{d/2}χ_{d/2}
NAMED_RELATIONS = {
    2: ('−χ1 = 10χ0', (10,)),
    4: ('χ2 = 22χ0 − 4χ1', (22, -4)),
    6: ('−χ3 = 34χ0 − 14χ1 + 2χ2', (34, -14, 2)),
    8: ('χ4 = 46χ0 − 25χ1 + 10χ2 − χ3', (46, -25, 10, -1)),
}


def q0_from_chi(inv: CYInvariants) -> dict:
    """Σ_p (−1)^p χ_p y^{d/2−p} в единицах ly."""
    return {2 * inv.d - 4 * p: (-1) ** p * c for p, c in enumerate(inv.chi) if c}


def elliptic_genus(inv: CYInvariants, qprec: int, xi6_coefficient: Optional[int] = None) -> JacobiForm:
    """Слабая форма веса 0 индекса d/2 с q⁰-членом χ_y-рода."""
    d = inv.d
    _check(2 <= d <= 13, 'd', f"должна лежать в 2..13, получено {d}")
    if d == 12:
        _check(xi6_coefficient is not None, 'xi6_coefficient',
               "обязателен при d = 12: q⁰-член не определяет род с точностью до cξ_{0,6}")
    elif d == 13:
        _check(xi6_coefficient == 0, 'xi6_coefficient',
               "должен быть явно равен 0 при d = 13")
    elif xi6_coefficient:
        raise ValidationError("Поле 'xi6_coefficient' допустимо только при d = 12, 13")

    report = relation_check(inv)
    failed = report.failures()
    if failed:
        names = '; '.join(f"{e['check']} (невязка {e.get('residual')})" for e in failed)
        hint = f", e(M₄) = {inv.euler} ≡ {inv.euler % 6} mod 6" if d == 4 else ''
        if all(e.get('kind') == 'congruence' for e in failed):
            raise DivisibilityError(f"χ-вектор d={d} нарушает сравнения: {names}{hint}")
        raise IdentityError(f"χ-вектор d={d} нарушает соотношения: {names}{hint}")

    q0 = q0_from_chi(inv)
    logger.info(f"Эллиптический род: d={d}, χ={inv.chi}, e={inv.euler}")
    if d % 2 == 0:
        return form_from_q0(d // 2, q0, qprec, xi6_coefficient if d == 12 else None)

    row = Series2({(0, ly): c for ly, c in q0.items()})
    factor = Series2({(0, 2): 1, (0, -2): 1})
    reduced = series_exact_div(row, factor)
    base = form_from_q0((d - 3) // 2, {ly: c for (_, ly), c in reduced.terms.items()}, qprec)
    return base * generator('phi032', max(24, qprec))


def chi_y_polynomial(phi: JacobiForm) -> List[int]:
    """χ_0..χ_d по q⁰-члену формы индекса d/2."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    d = phi.index2
    q0 = phi.q0()
    return [(-1) ** p * q0.get(2 * d - 4 * p, 0) for p in range(d + 1)]


def relation_check(inv: CYInvariants) -> CheckReport:
    d, chi = inv.d, inv.chi
    report = CheckReport(f"Соотношения χ_p, d={d}")
    e = inv.euler
    weighted = sum((-1) ** p * c * Fraction(d - 2 * p, 2) ** 2 for p, c in enumerate(chi))
    residual = Fraction(e * d, 12) - weighted
    report.add('e·d/12 = Σ(−1)^p χ_p (d/2−p)²', residual == 0, residual=residual)

    if d % 2:
        report.add('χ0 = 0 (нечётная d)', chi[0] == 0, residual=chi[0])
    if d in NAMED_RELATIONS:
        name, coeffs = NAMED_RELATIONS[d]
        middle = (-1) ** (d // 2) * chi[d // 2]
        value = sum(a * c for a, c in zip(coeffs, chi))
        report.add(name, middle == value, residual=middle - value)
    if d == 10:
        combo = chi[4] + chi[3] - chi[2] - chi[1]
        middle = -chi[5]
        value = 58 * chi[0] - 36 * chi[1] + 20 * chi[2] - 8 * chi[3] + Fraction(2 * combo, 5)
        report.add('−χ5 = 58χ0 − 36χ1 + 20χ2 − 8χ3 + (2/5)(χ4+χ3−χ2−χ1)', middle == value,
                   residual=middle - value)
        report.add('χ4+χ3−χ2−χ1 ≡ 0 mod 5', combo % 5 == 0, residual=combo % 5, kind='congruence')
    if d == 7:
        report.add('e = 12(χ2 − 3χ1)', e == 12 * (chi[2] - 3 * chi[1]), residual=e - 12 * (chi[2] - 3 * chi[1]))
        report.add_info('e = 12(b2 − 4b1) при b1 = χ1, b2 = χ1 + χ2',
                        value=12 * ((chi[1] + chi[2]) - 4 * chi[1]))
    if d == 4:
        report.add('e(M₄) ≡ 0 mod 6', e % 6 == 0, residual=e % 6, kind='congruence')
    return report.finish()


# --- делимость ---

def _split(series: Series2):
    constant = series.coeff((0, 0))
    tail = [c for (nq, _), c in series.terms.items() if nq > 0]
    return constant, tail


def _pattern(report: CheckReport, name: str, series: Series2, moduli, enforced=True):
    const_mod, tail_mod = moduli
    constant, tail = _split(series)
    orders = -(-series.qprec // 24) - 1 if series.qprec is not None else None
    passed = constant % const_mod == 0 and all(c % tail_mod == 0 for c in tail)
    report.add(name, passed, enforced=enforced, constant=constant,
               modulus=f"{const_mod}c + {tail_mod}q(...)", verified_orders=orders)


def divisibility_report(source: Union[CYInvariants, JacobiForm], qprec: int = 72) -> CheckReport:
    """Сравнения Эйлера и значения в точках z = 1/2, 1/3, 1/4 по классу индекса."""
    phi = elliptic_genus(source, qprec) if isinstance(source, CYInvariants) else source
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    d = phi.index2
    report = CheckReport(f"Делимость, индекс {d}/2")

    e = sum(c for (nq, _), c in phi.series.terms.items() if nq == 0)
    report.add('d·e ≡ 0 mod 24', d * e % 24 == 0, constant=e, modulus=24)
    if d % 8 == 2:
        report.add('e ≡ 0 mod 8 (при c₁ = 0 над Z)', e % 8 == 0, enforced=False, constant=e, modulus=8)
    if d % 2:
        report.finish()
        return report

    m = d // 2
    half = specialize_torsion(phi, 2)
    _pattern(report, f"z=1/2, индекс ≡ {m % 4} mod 4", half, HALF_PATTERNS[m % 4])
    if m % 4 == 1:
        _pattern(report, 'z=1/2, d ≡ 2 mod 8: 16c + 2⁹q(...)', half, (16, 2 ** 9), enforced=False)
    third = specialize_torsion(phi, 3)
    _pattern(report, f"z=1/3, индекс ≡ {m % 3} mod 3", third, THIRD_PATTERNS[m % 3])
    quarter = specialize_torsion(phi, 4)
    if m % 4 in QUARTER_PATTERNS:
        _pattern(report, f"z=1/4, индекс ≡ {m % 4} mod 4", quarter, QUARTER_PATTERNS[m % 4])
    if m % 4 == 1:
        _pattern(report, 'z=1/4, индекс ≡ 1 mod 4: 4c + 2⁴q(...) (при c₁ = 0)', quarter, (4, 2 ** 4),
                 enforced=False)
    return report.finish()


# --- специальные значения α, β, γ ---

def _double_tau(series: Series2) -> Series2:
    """τ -> 2τ."""
    return monomial_substitute(series, lambda k: (2 * k[0], k[1]), qprec=2 * series.qprec)


def special_value_suite(qprec: int) -> CheckReport:
    """Тождества для α = φ_{0,1}(τ,1/2), β = φ_{0,2}(τ,1/3), γ = φ_{0,3}(τ,1/4)/2."""
    report = CheckReport('Специальные значения α, β, γ')
    a, b, g = alpha(qprec), beta(qprec), gamma(qprec)

    delta2 = eta_quotient(EtaQuotientSpec(((2, 24), (1, -24))), qprec).scale(2 ** 12)
    report.add('α² − 64 = 2¹²Δ(2τ)/Δ(τ)', (a * a - 64).agrees_with(delta2))
    xi_half = specialize_torsion(generator('xi06', qprec), 2)
    report.add('ξ_{0,6}(τ,1/2) = 2¹²Δ(2τ)/Δ(τ)', xi_half.agrees_with(delta2))

    delta3 = eta_quotient(EtaQuotientSpec(((3, 12), (1, -12))), qprec).scale(3 ** 6)
    report.add('β³ − 27 = 3⁶(Δ(3τ)/Δ(τ))^{1/2}', (b ** 3 - 27).agrees_with(delta3))
    report.add('φ_{0,1}(τ,1/3) = β²',
               specialize_torsion(generator('phi01', qprec), 3).agrees_with(b * b))

    delta4 = eta_quotient(EtaQuotientSpec(((4, 12), (2, -12))), qprec).scale(2 ** 6)
    xi_quarter = specialize_torsion(generator('xi06', qprec), 4)
    report.add('ξ_{0,6}(τ,1/4) = 2⁶η(4τ)¹²/η(2τ)¹²', xi_quarter.agrees_with(delta4))
    report.add('ξ_{0,6}(τ,1/4) = 4(γ² − γ⁻²)', xi_quarter.agrees_with((g * g - g ** -2).scale(4)))
    phi1_quarter = specialize_torsion(generator('phi01', qprec), 4)
    report.add('γ·φ_{0,1}(τ,1/4) = 8γ⁴ + 2', (g * phi1_quarter).agrees_with(g ** 4 * 8 + 2))
    report.add('φ_{0,2}(τ,1/4) = 4γ²',
               specialize_torsion(generator('phi02', qprec), 4).agrees_with((g * g).scale(4)))

    report.add('α = 16γ⁴ − 8', a.agrees_with(g ** 4 * 16 - 8))
    ratio = series_exact_div(_double_tau(theta_constant(0, 0, qprec)), _double_tau(theta_constant(0, 1, qprec)))
    report.add('γ = ϑ00(2τ)/ϑ01(2τ)', g.agrees_with(ratio))

    report.add('α − 8 ≡ 0 mod 2⁸', all(c % 2 ** 8 == 0 for k, c in (a - 8).terms.items()))
    report.add('β − 3 ≡ 0 mod 3³', all(c % 3 ** 3 == 0 for k, c in (b - 3).terms.items()))
    report.add('коэффициенты α положительны', all(c > 0 for c in a.terms.values()))
    report.add('коэффициенты γ положительны', all(c > 0 for c in g.terms.values()))
    return report.finish()
