"""Heegaard diagrams induced by open books and the Goeritz cyclic-word checks.

The page Σ = Σ_{g,b} is cut into a disk by arcs J_1..J_n dual to the free generators.
The diagram of the open book (Σ, φ) has 𝔸-curves A_i built from J_i and 𝔹-curves B_i
built from the pushed-off copies J_i'. Every curve is recorded by its cyclic word
against the opposite disk system.

Arc words are computed from the mapping class: for a handle arc W(f, i) is
f(x_i)·x_i^-1, for the arc to the j-th inner boundary it is the j-th tail of f.
This differs from the geometric arc word by one fixed conjugation per arc, which
every closure below absorbs.

Export format::

    openbook g=1 b=1 phi=td
    A1: cyc(...)
    ...
    B1: cyc(...)
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum

from goeritz_ob.core.mcg import (
    DEFAULT_KERNEL_BOUND,
    Involution,
    KernelStatus,
    MappingClass,
    SurfaceSig,
    catalog_names,
    commutes_with,
    compose,
    conjugate_by_involution,
    equality,
    identity,
    inverse,
    is_boundary_twist_product,
    parse_twist_word,
    twist,
)
from goeritz_ob.core.words import (
    CyclicWord,
    Word,
    closure,
    invert,
    parse_cyclic_word,
    reduce,
    reflect,
)
from goeritz_ob.errors import (
    InconclusiveError,
    InvalidMappingClassError,
    NonCommutingError,
    OrientationError,
    SurfaceMismatchError,
    WordParseError,
)

logger = logging.getLogger(__name__)

BINDING_MARKER = "∂Σ × {1/2}"


@dataclass(frozen=True)
class OpenBook:
    """An abstract open book: a page signature and a monodromy."""

    surface: SurfaceSig
    monodromy: MappingClass

    def __post_init__(self):
        if self.monodromy.surface != self.surface:
            raise SurfaceMismatchError(
                f"monodromy lives on {self.monodromy.surface}, page is {self.surface}"
            )
        if not self.monodromy.is_preserving:
            raise InvalidMappingClassError("the monodromy must preserve orientation")

    @classmethod
    def from_twist_word(cls, genus: int, boundary: int, phi: str) -> "OpenBook":
        surface = SurfaceSig(genus, boundary)
        return cls(surface, parse_twist_word(phi, surface))

    @property
    def phi(self) -> MappingClass:
        return self.monodromy


def arc_word(f: MappingClass, i: int) -> Word:
    """W(f(J_i')) against the arc system, up to a fixed conjugation per arc."""
    surface = f.surface
    if i > 2 * surface.genus:
        return f.tail(i - 2 * surface.genus)
    x = Word.generator(i, surface.rank)
    return reduce(f(x) * invert(x))


@dataclass(frozen=True)
class HeegaardDiagram:
    """Cyclic words of the diagram curves.

    Attributes:
        book: The open book the diagram comes from.
        a_words: a_words[i-1] is the word of B_i against the 𝔸-disks.
        b_words: b_words[i-1] is the word of A_i against the 𝔹-disks.
        binding_marker: Position of the binding on the Heegaard surface.
    """

    book: OpenBook
    a_words: tuple[CyclicWord, ...]
    b_words: tuple[CyclicWord, ...]
    binding_marker: str = BINDING_MARKER

    @property
    def surface(self) -> SurfaceSig:
        return self.book.surface

    def export(self) -> str:
        """Serialize in the diagram export format."""
        lines = [f"openbook {self.surface} phi={self.book.monodromy.label or 'id'}"]
        lines += [f"A{i}: {word}" for i, word in enumerate(self.b_words, start=1)]
        lines += [f"B{i}: {word}" for i, word in enumerate(self.a_words, start=1)]
        return "\n".join(lines) + "\n"


def build_diagram(book: OpenBook) -> HeegaardDiagram:
    """Build the Heegaard diagram of an open book."""
    phi, phi_inv = book.monodromy, inverse(book.monodromy)
    n = book.surface.rank
    a_words = tuple(closure(reflect(arc_word(phi, i))) for i in range(1, n + 1))
    b_words = tuple(closure(arc_word(phi_inv, i)) for i in range(1, n + 1))
    logger.debug("Built diagram for %s phi=%s", book.surface, phi)
    return HeegaardDiagram(book, a_words, b_words)


def load_diagram(text: str) -> HeegaardDiagram:
    """Parse an exported diagram and check it against its own monodromy.

    Raises:
        WordParseError: On a malformed header or curve line.
        InvalidMappingClassError: If the listed words are not those of the monodromy.
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise WordParseError("empty diagram", 1)
    header = lines[0]
    fields = header.split(maxsplit=3)
    if len(fields) != 4 or fields[0] != "openbook" or not fields[3].startswith("phi="):
        raise WordParseError(f"bad diagram header {header!r}", 1)
    try:
        genus = int(fields[1].removeprefix("g="))
        boundary = int(fields[2].removeprefix("b="))
    except ValueError:
        raise WordParseError(f"bad surface signature in {header!r}", 10) from None
    phi_text = fields[3].removeprefix("phi=")
    diagram = build_diagram(OpenBook.from_twist_word(genus, boundary, phi_text))

    listed: dict[str, CyclicWord] = {}
    for line in lines[1:]:
        name, sep, rest = line.partition(":")
        if not sep:
            raise WordParseError(f"expected '<curve>: cyc(...)' in {line!r}", 1)
        listed[name.strip()] = parse_cyclic_word(rest, diagram.surface.rank)
    expected = {f"A{i}": w for i, w in enumerate(diagram.b_words, start=1)}
    expected |= {f"B{i}": w for i, w in enumerate(diagram.a_words, start=1)}
    if listed != expected:
        raise InvalidMappingClassError("diagram words do not match the stated monodromy")
    return diagram


class CandidateKind(str, Enum):
    """Whether a Goeritz candidate preserves or reverses the binding."""

    PRESERVING = "preserving"
    REVERSING = "reversing"


@dataclass(frozen=True)
class GoeritzCandidate:
    """A self-homeomorphism of the Heegaard splitting given by page data.

    A preserving candidate is (f00, f11), one class per half of the thickened page.
    A reversing candidate is (f01, f10, ι), which exchanges the halves through ι.
    """

    kind: CandidateKind
    first: MappingClass
    second: MappingClass
    involution: Involution | None = None

    def __post_init__(self):
        if self.first.surface != self.second.surface:
            raise SurfaceMismatchError("candidate classes live on different surfaces")
        if not (self.first.is_preserving and self.second.is_preserving):
            raise OrientationError("candidate page classes must preserve orientation")
        if self.kind == CandidateKind.REVERSING:
            if self.involution is None:
                raise OrientationError("a reversing candidate needs an involution")
            if self.involution.surface != self.first.surface:
                raise SurfaceMismatchError("involution and candidate classes differ in surface")

    @classmethod
    def preserving(cls, f00: MappingClass, f11: MappingClass) -> "GoeritzCandidate":
        return cls(CandidateKind.PRESERVING, f00, f11)

    @classmethod
    def reversing(
        cls, f01: MappingClass, f10: MappingClass, iota: Involution
    ) -> "GoeritzCandidate":
        return cls(CandidateKind.REVERSING, f01, f10, iota)

    @property
    def surface(self) -> SurfaceSig:
        return self.first.surface


@dataclass(frozen=True)
class CurveCheck:
    """The cyclic word of one image curve against its disk system."""

    curve: str
    word: CyclicWord

    @property
    def empty(self) -> bool:
        return self.word.is_empty


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a Goeritz membership check.

    Attributes:
        verdict: True iff every per-curve word is empty.
        per_curve: One entry per diagram curve, A-curves first.
        cross_check: Verdict of the equivalent mapping class equations.
    """

    verdict: bool
    per_curve: tuple[CurveCheck, ...]
    cross_check: bool

    @property
    def agreement(self) -> bool:
        return self.verdict == self.cross_check

    @classmethod
    def from_curves(cls, per_curve: list[CurveCheck], cross_check: bool) -> "CheckReport":
        report = cls(
            verdict=all(c.empty for c in per_curve),
            per_curve=tuple(per_curve),
            cross_check=cross_check,
        )
        if not report.agreement:
            logger.warning(
                "Word-level verdict %s disagrees with class-level verdict %s",
                report.verdict,
                report.cross_check,
            )
        return report


def _check_book(d: HeegaardDiagram, c: GoeritzCandidate) -> None:
    if c.surface != d.surface:
        raise SurfaceMismatchError(f"candidate on {c.surface}, diagram on {d.surface}")


def check_gbind_membership(d: HeegaardDiagram, c: GoeritzCandidate) -> CheckReport:
    """Decide whether a preserving candidate maps both disk systems to themselves.

    A_i ↦ Cl(W̄(f00, i) · W̄(f11, i)^-1) and B_i ↦ Cl(W(φ^-1 f00 φ, i) · W(f11, i)^-1),
    where W̄ is the reflected arc word.

    Raises:
        OrientationError: If the candidate is binding-reversing.
        SurfaceMismatchError: If candidate and diagram differ in surface.
    """
    if c.kind != CandidateKind.PRESERVING:
        raise OrientationError("membership in G_bind needs a binding-preserving candidate")
    _check_book(d, c)
    phi = d.book.monodromy
    f00, f11 = c.first, c.second
    conjugated = compose(compose(inverse(phi), f00), phi)
    n = d.surface.rank

    per_curve = []
    for i in range(1, n + 1):
        w11 = arc_word(f11, i)
        word = closure(reflect(arc_word(f00, i)) * reflect(invert(w11)))
        per_curve.append(CurveCheck(f"A{i}", word))
    for i in range(1, n + 1):
        word = closure(arc_word(conjugated, i) * invert(arc_word(f11, i)))
        per_curve.append(CurveCheck(f"B{i}", word))

    cross_check = equality(f00, f11) and equality(conjugated, f11)
    report = CheckReport.from_curves(per_curve, cross_check)
    logger.info("Binding-preserving check: verdict=%s", report.verdict)
    return report


def check_binding_reversing(d: HeegaardDiagram, c: GoeritzCandidate) -> CheckReport:
    """Decide whether a reversing candidate (f01, f10, ι) is a Goeritz element.

    A_i ↦ Cl(W̄(f01 ι, i) · W̄(f10 ι, i)^-1) and
    B_i ↦ Cl(W(f01 ι φ, i) · W(φ^-1 f10 ι, i)^-1).

    Raises:
        OrientationError: If the candidate is binding-preserving.
        SurfaceMismatchError: If candidate and diagram differ in surface.
    """
    if c.kind != CandidateKind.REVERSING or c.involution is None:
        raise OrientationError("the reversal check needs a binding-reversing candidate")
    _check_book(d, c)
    phi, phi_inv = d.book.monodromy, inverse(d.book.monodromy)
    f01, f10 = c.first, c.second
    reflection = c.involution.as_mapping_class()
    f01_iota = compose(f01, reflection)
    f10_iota = compose(f10, reflection)
    n = d.surface.rank

    per_curve = []
    for i in range(1, n + 1):
        w10 = arc_word(f10_iota, i)
        word = closure(reflect(arc_word(f01_iota, i)) * reflect(invert(w10)))
        per_curve.append(CurveCheck(f"A{i}", word))
    left = compose(f01_iota, phi)
    right = compose(phi_inv, f10_iota)
    for i in range(1, n + 1):
        word = closure(arc_word(left, i) * invert(arc_word(right, i)))
        per_curve.append(CurveCheck(f"B{i}", word))

    twisted = compose(f01, conjugate_by_involution(c.involution, phi))
    cross_check = equality(f01, f10) and equality(compose(phi_inv, f10), twisted)
    report = CheckReport.from_curves(per_curve, cross_check)
    logger.info("Binding-reversing check: verdict=%s", report.verdict)
    return report


def satisfies_reversal_criterion(f: MappingClass, book: OpenBook, iota: Involution) -> bool:
    """Whether φ^-1 ∘ f = f ∘ ι ∘ φ ∘ ι."""
    phi = book.monodromy
    return equality(
        compose(inverse(phi), f),
        compose(f, conjugate_by_involution(iota, phi)),
    )


def twist_generators(surface: SurfaceSig) -> list[MappingClass]:
    """Catalog twists and their inverses, in catalog order."""
    generators = []
    for name in catalog_names(surface):
        generators.append(twist(surface, name, 1))
        generators.append(twist(surface, name, -1))
    return generators


def reversal_criterion_search(
    book: OpenBook, iota: Involution, max_len: int
) -> MappingClass | None:
    """Breadth-first search for f with φ^-1 ∘ f = f ∘ ι ∘ φ ∘ ι.

    Args:
        book: The open book.
        iota: The orientation-reversing involution of the page.
        max_len: Maximal twist-word length explored.

    Returns:
        The first solution in breadth-first order, or None if there is none within
        the bound. None is not a proof that no solution exists.
    """
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    generators = twist_generators(book.surface)
    start = identity(book.surface)
    seen = {(start.action, start.tails)}
    queue: deque[tuple[MappingClass, int]] = deque([(start, 0)])
    while queue:
        f, length = queue.popleft()
        if satisfies_reversal_criterion(f, book, iota):
            logger.info("Reversal criterion solved at length %d by %s", length, f)
            return f
        if length == max_len:
            continue
        for generator in generators:
            candidate = compose(f, generator)
            key = (candidate.action, candidate.tails)
            if key not in seen:
                seen.add(key)
                queue.append((candidate, length + 1))
        logger.debug("Reversal search frontier: %d classes", len(queue))
    logger.info("No reversal solution within twist length %d", max_len)
    return None


def lift_to_goeritz(f: MappingClass, book: OpenBook) -> GoeritzCandidate:
    """The candidate F(f) = (f, f) for a class commuting with the monodromy.

    Raises:
        NonCommutingError: If f does not commute with φ.
    """
    if not commutes_with(f, book.monodromy):
        raise NonCommutingError(f"{f} does not commute with the monodromy {book.monodromy}")
    return GoeritzCandidate.preserving(f, f)


def compose_candidates(c1: GoeritzCandidate, c2: GoeritzCandidate) -> GoeritzCandidate:
    """Composition of two binding-preserving candidates, c1 after c2."""
    if c1.kind != CandidateKind.PRESERVING or c2.kind != CandidateKind.PRESERVING:
        raise OrientationError("only binding-preserving candidates compose page-wise")
    return GoeritzCandidate.preserving(compose(c1.first, c2.first), compose(c1.second, c2.second))


def conjugate_candidate(r: GoeritzCandidate, c: GoeritzCandidate) -> GoeritzCandidate:
    """h_r ∘ F ∘ h_r for the reversing candidate r = (id, id, ι).

    Swapping the halves through ι turns (f00, f11) into (ι f11 ι, ι f00 ι).

    Raises:
        OrientationError: If r is not reversing or c is not preserving.
        InvalidMappingClassError: If r is not of the form (id, id, ι).
    """
    if r.kind != CandidateKind.REVERSING or r.involution is None:
        raise OrientationError("conjugation needs a binding-reversing candidate")
    if c.kind != CandidateKind.PRESERVING:
        raise OrientationError("only binding-preserving candidates are conjugated")
    trivial = identity(r.surface)
    if not (equality(r.first, trivial) and equality(r.second, trivial)):
        raise InvalidMappingClassError("the conjugation action is modelled for (id, id, ι)")
    iota = r.involution
    return GoeritzCandidate.preserving(
        conjugate_by_involution(iota, c.second),
        conjugate_by_involution(iota, c.first),
    )


def gbind_equal(
    f: MappingClass,
    g: MappingClass,
    book: OpenBook,
    bound: int = DEFAULT_KERNEL_BOUND,
) -> bool:
    """Whether F(f) = F(g) in G_bind, i.e. f ∘ g^-1 is a product of boundary twists.

    Raises:
        NonCommutingError: If f or g does not commute with φ.
        InconclusiveError: If the boundary-twist search ends without a certificate.
    """
    for h in (f, g):
        if not commutes_with(h, book.monodromy):
            raise NonCommutingError(f"{h} does not commute with the monodromy {book.monodromy}")
    result = is_boundary_twist_product(compose(f, inverse(g)), bound)
    if result.status == KernelStatus.INCONCLUSIVE:
        raise InconclusiveError(f"cannot decide whether {f} and {g} agree in G_bind", bound)
    return result.is_member
