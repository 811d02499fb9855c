from fastapi import APIRouter

from app.genus import chi_y_polynomial, divisibility_report, elliptic_genus, relation_check
from app.mappings import DEFAULT_QMAX
from app.models import GenusRequest
from app.scope import domain_scope

router = APIRouter(prefix="/genus", tags=["genus"])


@router.post("/")
def compute_genus(request: GenusRequest, qmax: int = DEFAULT_QMAX):
    with domain_scope():
        inv = request.invariants()
        phi = elliptic_genus(inv, 24 * qmax, request.xi6_coefficient)
        divisibility = divisibility_report(phi)
        return {
            "d": inv.d,
            "chi": inv.chi,
            "euler": inv.euler,
            "chi_y": chi_y_polynomial(phi),
            "genus": phi.to_json(),
            "relations": relation_check(inv).to_json(),
            "divisibility": divisibility.to_json(),
            "passed": divisibility.passed,
        }
