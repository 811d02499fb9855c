"""Второе квантование эллиптического рода, аномалия Ходжа и форма E(M; Z)."""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List

from app.errors import IdentityError, PrecisionError, ValidationError, _check
from app.genus import elliptic_genus
from app.jacobi.basis import genus_basis
from app.jacobi.forms import JacobiForm, generator
from app.jacobi.hecke import integral_orders
from app.mappings import DEFAULT_PMAX, DEFAULT_QMAX, DEFAULT_SMAX
from app.models import CYInvariants
from app.series import Series2, Series3, monomial_substitute, product_expand
from app.siegel.lifts import SiegelSeries, _factors, exp_lift, required_qprec, scale_z

logger = logging.getLogger(__name__)


def sqeg(phi: JacobiForm, pmax: int = DEFAULT_PMAX, qmax: int = DEFAULT_QMAX) -> Series3:
    """Π_{n>0, m≥0} (1 - q^m y^l p^n)^{-f(mn,l)} до p^pmax включительно и q^{<qmax}; p хранится как s."""
    _check(phi.weight2 == 0, 'weight', "должен быть 0")
    _check(pmax >= 0, 'pmax', "должно быть неотрицательным")
    _check(qmax >= 1, 'qmax', "должно быть положительным")
    needed = (qmax - 1) * pmax
    if phi.qprec is not None and needed >= integral_orders(phi.qprec):
        raise PrecisionError(f"Для SQEG до p^{pmax}, q^{qmax} нужна строка q^{needed} рода", needed=needed + 1)
    rows = phi.rows()
    factors = []
    for n in range(1, pmax + 1):
        for m in range(qmax):
            for ly, c in rows.get(24 * m * n, {}).items():
                factors.append(((24 * m, ly, 24 * n), -c))
    return product_expand(factors, 24 * qmax, 24 * (pmax + 1))


def symmetric_product_genus(phi: JacobiForm, n: int, qmax: int = DEFAULT_QMAX) -> Series2:
    """Коэффициент при p^n в SQEG: орбифолдный эллиптический род S^n M."""
    _check(n >= 0, 'n', "должно быть неотрицательным")
    full = sqeg(phi, n, qmax)
    return Series2({(nq, ly): c for (nq, ly, ms), c in full.terms.items() if ms == 24 * n}, 24 * qmax)


# --- аномалия Ходжа ---

class _Product:
    """Накопитель η- и ϑ-множителей в структурном виде."""

    def __init__(self, qmax: int):
        self.qmax = qmax
        self.prefactor = [0, 0, 0]
        self.y_pairs = []
        self.factors = []

    def eta(self, k: int):
        self.prefactor[0] += k
        self.factors += [((24 * n, 0, 0), k) for n in range(1, self.qmax)]

    def theta(self, ly: int, e: int):
        """ϑ(τ, (ly/4)·z)^e = q^{e/8} y^{ly·e/8} (1 - y^{-ly/4})^e Π(...)^e."""
        if not e:
            return
        self.prefactor[0] += 3 * e
        self.prefactor[1] += ly * e // 2
        self.y_pairs.append((ly, e))
        for n in range(1, self.qmax):
            self.factors += [((24 * n, ly, 0), e), ((24 * n, -ly, 0), e), ((24 * n, 0, 0), e)]

    def s_power(self, ms: int):
        self.prefactor[2] += ms

    def build(self, weight2: int, character_order: int, index_t) -> SiegelSeries:
        return SiegelSeries(
            body=product_expand(self.factors, 24 * self.qmax, None),
            prefactor=tuple(self.prefactor),
            y_factors=_factors(self.y_pairs),
            weight2=weight2,
            character_order=character_order,
            index_t=index_t,
        )


def _signed_chi(inv: CYInvariants) -> List[int]:
    return [(-1) ** p * c for p, c in enumerate(inv.chi)]


def hodge_anomaly(inv: CYInvariants, qmax: int = DEFAULT_QMAX) -> SiegelSeries:
    """η^{(e - 3χ'_{d0})/2} Π ϑ(τ,pz)^{-χ'_{d0-p}} s^{-p²χ'_{d0-p}/2} (чётная d)
    или η^{e/2} Π ϑ(τ,(2p-1)z/2)^{-χ'_{d0-p+1}} s^{-(2p-1)²χ'/8} (нечётная d).

    Тело зависит только от q; s входит лишь в префактор.
    """
    d = inv.d
    e = inv.euler
    chi = _signed_chi(inv)
    d0 = d // 2
    acc = _Product(qmax)
    if d % 2 == 0:
        twice = e - 3 * chi[d0]
        if twice % 2:
            raise ValidationError(f"Показатель η (e - 3χ'_{d0})/2 = {Fraction(twice, 2)} не целый")
        acc.eta(twice // 2)
        for p in range(1, d0 + 1):
            power = -chi[d0 - p]
            acc.theta(4 * p, power)
            acc.s_power(12 * p * p * power)
        weight2 = -chi[d0]
    else:
        if e % 2:
            raise ValidationError(f"Показатель η e/2 = {Fraction(e, 2)} не целый")
        acc.eta(e // 2)
        for p in range(1, d0 + 1):
            power = -chi[d0 - p + 1]
            acc.theta(2 * (2 * p - 1), power)
            acc.s_power(3 * (2 * p - 1) ** 2 * power)
        weight2 = 0
    return acc.build(weight2, 24 // gcd(24, e), d0 if d % 2 == 0 else None)


# --- E(M; Z) ---

def _genus_prec(d: int, qmax: int, smax: int) -> int:
    t = d // 2 if d % 2 == 0 else 2 * d
    return max(24, required_qprec(t, qmax, smax))


def e_form(inv: CYInvariants, qmax: int = DEFAULT_QMAX, smax: int = DEFAULT_SMAX,
           xi6_coefficient=None) -> SiegelSeries:
    """H(M; Z)·SQEG(M; Z) с p = s^{d/2}; для нечётной d затем Λ2: (τ,z,ω) -> (τ,2z,4ω)."""
    d = inv.d
    if d % 2 == 0:
        t = d // 2
        pmax = (smax - 1) // t
    else:
        t = 2 * d
        pmax = (smax - 1) // t
    phi = elliptic_genus(inv, _genus_prec(d, qmax, smax), xi6_coefficient)
    quantized = sqeg(phi, pmax, qmax)
    # p^n -> s^{n·d/2}
    regraded = monomial_substitute(quantized, lambda k: (k[0], k[1], k[2] * d // 2), qprec=quantized.qprec,
                                   sprec=quantized.sprec * d // 2)
    anomaly = hodge_anomaly(inv, qmax)
    result = anomaly * SiegelSeries(body=regraded)
    if d % 2:
        result = result.substitute(2, 4)
    logger.info(f"E-форма: d={d}, χ={inv.chi}, q < {qmax}, s < {smax}")
    return SiegelSeries(
        body=result.body.truncate(24 * qmax, 24 * smax),
        prefactor=result.prefactor,
        y_factors=result.y_factors,
        phase=result.phase,
        weight2=anomaly.weight2,
        character_order=anomaly.character_order,
        index_t=t,
    )


def genus_coordinates(phi: JacobiForm) -> Dict[int, int]:
    """Коэффициенты a_n в φ = Σ a_n ψ_n по q⁰-членам нормированного базиса индекса m."""
    m = phi.index
    remainder = dict(phi.q0())
    coords = {}
    for n in range(m, 0, -1):
        a = remainder.get(4 * n, 0)
        if not a:
            continue
        coords[n] = a
        for ly, c in genus_basis(m, n, 24).q0().items():
            v = remainder.get(ly, 0) - a * c
            if v:
                remainder[ly] = v
            else:
                remainder.pop(ly, None)
    if remainder:
        raise IdentityError(f"q⁰-член {remainder} не раскладывается по нормированному базису индекса {m}")
    return coords


def assemble_e_form(inv: CYInvariants, qmax: int = DEFAULT_QMAX, smax: int = DEFAULT_SMAX) -> SiegelSeries:
    """E(M; Z) как произведение степеней базисных подъёмов (d = 2, 4, 6, 8) или Φ3, Φ5 (d = 3, 5)."""
    d = inv.d
    _check(d in (2, 3, 4, 5, 6, 8), 'd', f"сборка задана для d = 2, 3, 4, 5, 6, 8, получено {d}")
    if d % 2 == 0:
        m = d // 2
        qprec = _genus_prec(d, qmax, smax)
        minus = -elliptic_genus(inv, qprec)
        result = None
        for n, a in sorted(genus_coordinates(minus).items()):
            factor = exp_lift(genus_basis(m, n, qprec), qmax, smax) ** a
            result = factor if result is None else result * factor
            logger.debug(f"Сборка E: ψ_{m}^({n}) в степени {a}")
        if result is None:
            return SiegelSeries(body=Series3.one(qprec=24 * qmax, sprec=24 * smax), index_t=m)
        return result

    qprec = max(24, required_qprec(2 * d, qmax, smax))
    phi = elliptic_genus(inv, qprec)
    base = generator('phi032', qprec)
    if d == 5:
        base = base * generator('phi01', qprec)
    top = phi.q0().get(2 * (d - 2), 0)
    if not phi.agrees_with(base * top):
        raise IdentityError(f"Род d={d} не пропорционален базисной форме")
    lifted = exp_lift(scale_z(base, 2), qmax, smax)
    return lifted ** (-top)
