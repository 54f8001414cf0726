"""Heegaard diagram and Goeritz group routes."""

from fastapi import APIRouter

from goeritz_ob.api.errors import to_http_error
from goeritz_ob.api.models import (
    BookRequest,
    CheckBindRequest,
    CheckResponse,
    CheckReverseRequest,
    CurveWord,
    DiagramResponse,
    EqualRequest,
    EqualResponse,
    SearchReverseRequest,
    SearchReverseResponse,
)
from goeritz_ob.config import get_settings
from goeritz_ob.core.heegaard import (
    CheckReport,
    GoeritzCandidate,
    OpenBook,
    build_diagram,
    check_binding_reversing,
    check_gbind_membership,
    gbind_equal,
    reversal_criterion_search,
)
from goeritz_ob.core.mcg import equality, identity, parse_involution, parse_twist_word
from goeritz_ob.errors import GoeritzError

router = APIRouter(tags=["goeritz"])


def _book(request: BookRequest) -> OpenBook:
    return OpenBook.from_twist_word(request.genus, request.boundary, request.phi)


def _check_response(report: CheckReport) -> CheckResponse:
    return CheckResponse(
        verdict=report.verdict,
        cross_check=report.cross_check,
        per_curve=[CurveWord(curve=c.curve, word=str(c.word)) for c in report.per_curve],
    )


@router.post("/diagram", response_model=DiagramResponse)
def diagram(request: BookRequest) -> DiagramResponse:
    """Heegaard diagram of an open book."""
    try:
        d = build_diagram(_book(request))
    except GoeritzError as e:
        raise to_http_error(e) from e
    return DiagramResponse(
        text=d.export(),
        a_curves=[str(w) for w in d.b_words],
        b_curves=[str(w) for w in d.a_words],
    )


@router.post("/goeritz/check-bind", response_model=CheckResponse)
def check_bind(request: CheckBindRequest) -> CheckResponse:
    """Whether (f00, f11) is a binding-preserving Goeritz element."""
    try:
        book = _book(request)
        candidate = GoeritzCandidate.preserving(
            parse_twist_word(request.f00, book.surface),
            parse_twist_word(request.f11, book.surface),
        )
        report = check_gbind_membership(build_diagram(book), candidate)
    except GoeritzError as e:
        raise to_http_error(e) from e
    return _check_response(report)


@router.post("/goeritz/check-reverse", response_model=CheckResponse)
def check_reverse(request: CheckReverseRequest) -> CheckResponse:
    """Whether (f01, f10, ι) is a binding-reversing Goeritz element."""
    try:
        book = _book(request)
        candidate = GoeritzCandidate.reversing(
            parse_twist_word(request.f01, book.surface),
            parse_twist_word(request.f10, book.surface),
            parse_involution(request.iota, book.surface),
        )
        report = check_binding_reversing(build_diagram(book), candidate)
    except GoeritzError as e:
        raise to_http_error(e) from e
    return _check_response(report)


@router.post("/goeritz/search-reverse", response_model=SearchReverseResponse)
def search_reverse(request: SearchReverseRequest) -> SearchReverseResponse:
    """Bounded search for a solution of the reversal criterion."""
    max_len = get_settings().search_max_len if request.max_len is None else request.max_len
    try:
        book = _book(request)
        iota = parse_involution(request.iota, book.surface)
        found = reversal_criterion_search(book, iota, max_len)
    except GoeritzError as e:
        raise to_http_error(e) from e
    if found is None:
        return SearchReverseResponse(found=False, element=None, max_len=max_len)
    element = "identity" if equality(found, identity(book.surface)) else str(found)
    return SearchReverseResponse(found=True, element=element, max_len=max_len)


@router.post("/goeritz/equal", response_model=EqualResponse)
def equal(request: EqualRequest) -> EqualResponse:
    """Whether F(f) = F(g) in the binding-preserving subgroup."""
    bound = request.bound or get_settings().kernel_bound
    try:
        book = _book(request)
        result = gbind_equal(
            parse_twist_word(request.f, book.surface),
            parse_twist_word(request.g, book.surface),
            book,
            bound,
        )
    except GoeritzError as e:
        raise to_http_error(e) from e
    return EqualResponse(equal=result, bound=bound)
