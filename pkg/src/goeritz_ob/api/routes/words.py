"""Word-core routes."""

from typing import Literal

from fastapi import APIRouter

from goeritz_ob.api.errors import to_http_error
from goeritz_ob.api.models import WordRequest, WordResponse
from goeritz_ob.core.words import (
    CyclicWord,
    Word,
    closure,
    invert,
    is_gof_word,
    parse_cyclic_word,
    parse_word,
    reduce,
    reflect,
)
from goeritz_ob.errors import GoeritzError

router = APIRouter(prefix="/words", tags=["words"])


def _parse(text: str) -> Word | CyclicWord:
    if text.strip().startswith("cyc("):
        return parse_cyclic_word(text)
    return parse_word(text)


@router.post("/{op}", response_model=WordResponse)
def word_op(
    op: Literal["reduce", "closure", "reflect", "invert", "gof"], request: WordRequest
) -> WordResponse:
    """Apply one word operation."""
    try:
        w = _parse(request.word)
        if op == "gof":
            cw = closure(w) if isinstance(w, Word) else w
            gof = is_gof_word(CyclicWord(cw.letters, 2))
            return WordResponse(op=op, result="true" if gof else "false", gof=gof)
        if op == "reduce":
            result = reduce(w) if isinstance(w, Word) else w
        elif op == "closure":
            result = closure(w) if isinstance(w, Word) else w
        elif op == "reflect":
            result = reflect(w)
        else:
            result = invert(w)
    except GoeritzError as e:
        raise to_http_error(e) from e
    return WordResponse(op=op, result=str(result))
