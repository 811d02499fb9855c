from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.errors import DivisibilityError, _check


def validate_dimension(d: int, key: str):
    _check(isinstance(d, int) and d >= 1, key, "должна быть положительным целым числом")
    return d


def validate_hodge(hodge: List[List[int]], d: int, key: str):
    _check(len(hodge) == d + 1 and all(len(row) == d + 1 for row in hodge), key,
           f"должна быть таблицей {d + 1}×{d + 1}")
    for p in range(d + 1):
        for q in range(d + 1):
            _check(hodge[p][q] >= 0, key, f"содержит отрицательное число Ходжа h^{p},{q}")
            _check(hodge[p][q] == hodge[q][p], key, f"нарушает симметрию h^{p},{q} = h^{q},{p}")
    return hodge


class CYInvariants(BaseModel):
    """Размерность d и вектор χ_p = Σ_q (−1)^q h^{p,q}, p = 0..d."""
    model_config = ConfigDict(frozen=True)

    d: int
    chi: List[int]

    @model_validator(mode='before')
    @classmethod
    def _fold_hodge(cls, data):
        if isinstance(data, dict) and 'hodge' in data and 'chi' not in data:
            d = validate_dimension(data.get('d'), 'd')
            hodge = validate_hodge(data['hodge'], d, 'hodge')
            data = {'d': d, 'chi': fold_hodge(hodge)}
        return data

    @model_validator(mode='after')
    def _serre_duality(self):
        validate_dimension(self.d, 'd')
        _check(len(self.chi) == self.d + 1, 'chi', f"должно содержать {self.d + 1} значений χ_0..χ_{self.d}")
        sign = -1 if self.d % 2 else 1
        for p in range(self.d + 1):
            _check(self.chi[p] == sign * self.chi[self.d - p], 'chi',
                   f"нарушает двойственность Серра: χ_{p} = {self.chi[p]}, χ_{self.d - p} = {self.chi[self.d - p]}")
        return self

    @property
    def euler(self) -> int:
        return sum((-1) ** p * c for p, c in enumerate(self.chi))

    @classmethod
    def from_hodge(cls, hodge: List[List[int]]) -> 'CYInvariants':
        return cls(d=len(hodge) - 1, hodge=hodge)

    @classmethod
    def from_euler(cls, d: int, e: int) -> 'CYInvariants':
        """χ-вектор CY-многообразия размерности 3 или 5 по эйлеровой характеристике."""
        _check(d in (3, 5), 'd', f"восстановление по e поддерживается для d = 3, 5, получено {d}")
        if d == 3:
            if e % 2:
                raise DivisibilityError(f"e(M₃) = {e} должно быть чётным")
            return cls(d=3, chi=[0, -e // 2, e // 2, 0])
        if e % 24:
            raise DivisibilityError(f"e(M₅) = {e}: нарушено d·e ≡ 0 mod 24")
        k = e // 24
        return cls(d=5, chi=[0, -k, 11 * k, -11 * k, k, 0])

    def mirror(self) -> 'CYInvariants':
        """Зеркальный партнёр: h^{p,q} -> h^{d−p,q}, т.е. χ_p -> χ_{d−p}."""
        return CYInvariants(d=self.d, chi=[self.chi[self.d - p] for p in range(self.d + 1)])


def fold_hodge(hodge: List[List[int]]) -> List[int]:
    return [sum((-1) ** q * h for q, h in enumerate(row)) for row in hodge]


class GenusRequest(BaseModel):
    d: int
    chi: Optional[List[int]] = None
    hodge: Optional[List[List[int]]] = None
    euler: Optional[int] = None
    xi6_coefficient: Optional[int] = None

    def invariants(self) -> CYInvariants:
        if self.chi is not None:
            return CYInvariants(d=self.d, chi=self.chi)
        if self.hodge is not None:
            return CYInvariants(d=self.d, hodge=self.hodge)
        _check(self.euler is not None, 'chi', "обязательно, если не заданы hodge или euler")
        return CYInvariants.from_euler(self.d, self.euler)
