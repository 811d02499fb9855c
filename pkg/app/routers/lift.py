from typing import Optional

from fastapi import APIRouter

from app.errors import ValidationError
from app.jacobi.forms import form_from_expression
from app.mappings import ARITHMETIC_LIFTS, DEFAULT_QMAX, DEFAULT_SMAX
from app.scope import domain_scope
from app.siegel.arithmetic import arithmetic_lift, delta_half_theta
from app.siegel.lifts import exp_lift, lift_divisor, named_lift, required_qprec

router = APIRouter(prefix="/lift", tags=["lift"])


@router.get("/explift")
def get_exp_lift(form: Optional[str] = None, name: Optional[str] = None,
                 qmax: int = DEFAULT_QMAX, smax: int = DEFAULT_SMAX, divisor: bool = False):
    with domain_scope():
        if name:
            return named_lift(name, qmax, smax).to_json()
        if not form:
            raise ValidationError("Нужно задать 'form' или 'name'")
        t = form_from_expression(form, 24).index
        phi = form_from_expression(form, max(24, required_qprec(t, qmax, smax)))
        payload = exp_lift(phi, qmax, smax).to_json()
        if divisor:
            payload["divisor"] = [h.to_json() for h in lift_divisor(phi)]
        return payload


@router.get("/arith")
def get_arithmetic_lift(name: str = 'Delta2', bound: int = DEFAULT_QMAX):
    with domain_scope():
        if ARITHMETIC_LIFTS.get(name.lower()) == 'DeltaHalf':
            return delta_half_theta(bound, bound).to_json()
        return arithmetic_lift(name, bound, bound).to_json()
