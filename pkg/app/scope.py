import logging
from contextlib import contextmanager

import pydantic
from fastapi import HTTPException

from app.errors import JacobiError

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s\t%(levelname)s:\t%(message)s',
)
logger = logging.getLogger(__name__)


@contextmanager
def domain_scope():
    try:
        yield
    except HTTPException:
        raise
    except JacobiError as e:
        logger.error(f"{type(e).__name__}: {e}")
        raise HTTPException(
            status_code=400,
            detail={"error": type(e).__name__, "exit_code": e.exit_code, "message": str(e)}
        )
    except pydantic.ValidationError as e:
        logger.error(f"ValidationError: {e}")
        raise HTTPException(
            status_code=400,
            detail={"error": "ValidationError", "exit_code": 2, "message": str(e)}
        )
    except Exception as e:
        logger.error(f"Unexpected error: {e}")
        raise HTTPException(
            status_code=500,
            detail=f"Внутренняя ошибка сервера: {e}"
        )
