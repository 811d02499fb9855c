from fastapi import APIRouter

from app.mappings import DEFAULT_QMAX, RANDOM_SAMPLES
from app.scope import domain_scope
from app.verify import run_suite

router = APIRouter(prefix="/verify", tags=["verify"])


@router.get("/{suite}")
def verify_suite(suite: str, qmax: int = DEFAULT_QMAX, samples: int = RANDOM_SAMPLES):
    with domain_scope():
        report = run_suite(suite, qmax, samples)
        return {"suite": suite, "passed": report.passed, "checks": report.to_json()}
