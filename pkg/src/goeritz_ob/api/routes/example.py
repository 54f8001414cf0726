"""Routes for the genus-two example."""

from fastapi import APIRouter, Query

from goeritz_ob.api.errors import to_http_error
from goeritz_ob.api.models import TwistFormulaResponse
from goeritz_ob.core.example import twisted_binding_word
from goeritz_ob.core.words import is_gof_word
from goeritz_ob.errors import GoeritzError

router = APIRouter(prefix="/example", tags=["example"])


@router.get("/twist-formula", response_model=TwistFormulaResponse)
def twist_formula(
    u: int = Query(0, description="Power of the twist along α_1"),
    v: int = Query(0, description="Power of the twist along α_2"),
    n: int = Query(1, description="Monodromy exponent, nonzero"),
) -> TwistFormulaResponse:
    """β-word of t_{α_1}^u t_{α_2}^v applied to the binding."""
    try:
        word = twisted_binding_word(u, v, n)
    except GoeritzError as e:
        raise to_http_error(e) from e
    return TwistFormulaResponse(u=u, v=v, n=n, word=str(word), gof=is_gof_word(word))
