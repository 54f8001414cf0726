"""Translation of engine errors into HTTP errors."""

from fastapi import HTTPException

from goeritz_ob.errors import GoeritzError, InconclusiveError


def to_http_error(e: GoeritzError) -> HTTPException:
    """409 for an inconclusive bounded search, 422 for any other engine error."""
    if isinstance(e, InconclusiveError):
        return HTTPException(status_code=409, detail=f"{e} (bound {e.bound})")
    return HTTPException(status_code=422, detail=str(e))
