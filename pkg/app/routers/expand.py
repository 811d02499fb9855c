from fastapi import APIRouter

from app.jacobi.forms import form_from_expression
from app.mappings import DEFAULT_QMAX
from app.scope import domain_scope

router = APIRouter(prefix="/expand", tags=["expand"])


@router.get("/")
def expand_form(form: str, qmax: int = DEFAULT_QMAX):
    with domain_scope():
        return form_from_expression(form, 24 * qmax).to_json()
