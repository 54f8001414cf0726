"""API request/response models."""

from pydantic import BaseModel, Field


class WordRequest(BaseModel):
    """Request body for the word endpoints."""

    word: str = Field(..., description="A word such as 'x1 x2^-1' or a cyclic word 'cyc(...)'")


class WordResponse(BaseModel):
    """Result of a word operation; ``gof`` is set only by the gof operation."""

    op: str
    result: str
    gof: bool | None = None


class BookRequest(BaseModel):
    """An open book (Σ_{g,b}, φ) with φ given as a twist word."""

    genus: int = Field(1, ge=0)
    boundary: int = Field(1, ge=1)
    phi: str = Field("", description="Monodromy twist word, e.g. 'td^2'")


class DiagramResponse(BaseModel):
    """The Heegaard diagram of an open book."""

    text: str
    a_curves: list[str]
    b_curves: list[str]


class CheckBindRequest(BookRequest):
    f00: str = ""
    f11: str = ""


class CheckReverseRequest(BookRequest):
    f01: str = ""
    f10: str = ""
    iota: str = Field("std", description="'std', 'swap' or 'images(w1; w2; ...)'")


class CurveWord(BaseModel):
    """The cyclic word of one image curve."""

    curve: str
    word: str


class CheckResponse(BaseModel):
    """Outcome of a Goeritz membership check."""

    verdict: bool
    cross_check: bool
    per_curve: list[CurveWord]


class SearchReverseRequest(BookRequest):
    iota: str = "std"
    max_len: int | None = Field(None, ge=0)


class SearchReverseResponse(BaseModel):
    found: bool
    element: str | None
    max_len: int


class EqualRequest(BookRequest):
    f: str = ""
    g: str = ""
    bound: int | None = Field(None, gt=0)


class EqualResponse(BaseModel):
    equal: bool
    bound: int


class TwistFormulaResponse(BaseModel):
    """The twisted binding word, agreed by the planar engine and the closed formula."""

    u: int
    v: int
    n: int
    word: str
    gof: bool
