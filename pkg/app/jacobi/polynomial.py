"""Целочисленные многочлены от формальных символов Φ1..Φ4 (генераторы φ_{0,1}..φ_{0,4})."""
import logging
import re
from dataclasses import dataclass
from typing import Dict, Tuple

from sympy import Poly, symbols
from sympy.parsing.sympy_parser import (
    convert_xor, implicit_multiplication, parse_expr, standard_transformations,
)

from app.errors import ParseError, ValidationError
from app.mappings import GENERATOR_ALIASES, GENERATOR_POLYS

logger = logging.getLogger(__name__)

PHI = symbols('Phi1 Phi2 Phi3 Phi4')
WEIGHTS = (1, 2, 3, 4)

_token_re = re.compile(r'[A-Za-zΦφξ][A-Za-z0-9_]*')
_allowed_re = re.compile(r'(?:Phi[1-4]|[\d\s+\-*^()])*')
_transformations = standard_transformations + (convert_xor, implicit_multiplication)


@dataclass(frozen=True)
class GeneratorPolynomial:
    poly: Poly

    @classmethod
    def symbol(cls, i: int) -> 'GeneratorPolynomial':
        return cls(Poly(PHI[i - 1], *PHI, domain='ZZ'))

    @classmethod
    def constant(cls, c: int) -> 'GeneratorPolynomial':
        return cls(Poly(c, *PHI, domain='ZZ'))

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int, int, int], int]) -> 'GeneratorPolynomial':
        terms = {m: c for m, c in terms.items() if c}
        if not terms:
            return cls.constant(0)
        return cls(Poly.from_dict(terms, *PHI, domain='ZZ'))

    @classmethod
    def parse(cls, text: str) -> 'GeneratorPolynomial':
        def replace(match):
            name = GENERATOR_ALIASES.get(match.group(0), GENERATOR_ALIASES.get(match.group(0).lower()))
            if name is None:
                raise ParseError(f"Неизвестный генератор: {match.group(0)}")
            expansion = GENERATOR_POLYS[name]
            if expansion is None:
                raise ParseError(f"Генератор {name} полуцелого индекса не выражается через Φ1..Φ4")
            return f"({expansion})"

        expanded = _token_re.sub(replace, text)
        if not _allowed_re.fullmatch(expanded):
            raise ParseError(f"Недопустимые символы в выражении: {text}")
        try:
            expr = parse_expr(expanded, local_dict=dict(zip(map(str, PHI), PHI)),
                              transformations=_transformations)
            return cls(Poly(expr, *PHI, domain='ZZ'))
        except Exception as e:
            raise ParseError(f"Не удалось разобрать многочлен '{text}': {e}")

    def terms(self) -> Dict[Tuple[int, ...], int]:
        return {m: int(c) for m, c in self.poly.terms() if c}

    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def index(self) -> int:
        """Индекс формы: взвешенная степень a + 2b + 3c + 4d (однородная)."""
        weights = {sum(w * e for w, e in zip(WEIGHTS, m)) for m in self.terms()}
        if len(weights) != 1:
            raise ValidationError(f"Многочлен {self} не однороден по индексу: {sorted(weights)}")
        return weights.pop()

    def __add__(self, other):
        return GeneratorPolynomial(self.poly + _lift(other).poly)

    __radd__ = __add__

    def __sub__(self, other):
        return GeneratorPolynomial(self.poly - _lift(other).poly)

    def __rsub__(self, other):
        return GeneratorPolynomial(_lift(other).poly - self.poly)

    def __neg__(self):
        return GeneratorPolynomial(-self.poly)

    def __mul__(self, other):
        return GeneratorPolynomial(self.poly * _lift(other).poly)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return GeneratorPolynomial(self.poly ** k)

    def normal_form(self) -> 'GeneratorPolynomial':
        """Приведение по соотношению Φ1Φ3 = Φ2² + 4Φ4: ни один моном не содержит Φ1Φ3."""
        terms = dict(self.terms())
        while True:
            mixed = [m for m in terms if m[0] and m[2]]
            if not mixed:
                break
            m = max(mixed)
            c = terms.pop(m)
            a, b, cc, d = m
            for target, factor in (((a - 1, b + 2, cc - 1, d), 1), ((a - 1, b, cc - 1, d + 1), 4)):
                v = terms.get(target, 0) + c * factor
                if v:
                    terms[target] = v
                else:
                    terms.pop(target, None)
        return GeneratorPolynomial.from_terms(terms)

    def exact_div(self, c: int) -> 'GeneratorPolynomial':
        terms = self.normal_form().terms()
        if any(v % c for v in terms.values()):
            raise ValidationError(f"Многочлен {self} не делится на {c}")
        return GeneratorPolynomial.from_terms({m: v // c for m, v in terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GeneratorPolynomial):
            return NotImplemented
        return self.terms() == other.terms()

    def __hash__(self):
        return hash(tuple(sorted(self.terms().items())))

    def __str__(self):
        text = str(self.poly.as_expr()).replace('**', '^')
        return text.replace('Phi', 'Φ')


def _lift(value) -> GeneratorPolynomial:
    if isinstance(value, GeneratorPolynomial):
        return value
    if isinstance(value, int):
        return GeneratorPolynomial.constant(value)
    raise TypeError(f"Нельзя привести {value!r} к многочлену от Φ1..Φ4")
