"""The Goeritz group of the genus-two example in a 2×2 integer matrix model.

G = <A, B, r | ABA = BAB, (AB)^6 = 1, r^2 = 1, rAr = A^-1, rBr = B^-1>, with A, B the
images of the twists t_α, t_β and r the binding-reversing element. The matrices are
the H_1 actions of the catalog classes, so A ↦ t_a and B ↦ t_b is a homomorphism
on the nose.
"""

import logging
import random
import re
from dataclasses import dataclass

from sympy import ImmutableMatrix, eye

from goeritz_ob.core.heegaard import (
    GoeritzCandidate,
    OpenBook,
    build_diagram,
    check_binding_reversing,
    conjugate_candidate,
    gbind_equal,
    lift_to_goeritz,
)
from goeritz_ob.core.mcg import (
    DEFAULT_KERNEL_BOUND,
    MappingClass,
    SurfaceSig,
    compose,
    identity,
    inverse,
    involution,
    twist,
)
from goeritz_ob.errors import RepresentationError, WordParseError

logger = logging.getLogger(__name__)

GENERATORS = ("A", "B", "r")
_TOKEN = re.compile(r"([ABr])(?:\^(-?\d+))?")


@dataclass(frozen=True)
class PresentationWord:
    """A word in A, B, r as (generator, exponent) tokens."""

    tokens: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for generator, exponent in self.tokens:
            if generator not in GENERATORS:
                raise WordParseError(f"unknown generator {generator!r}", 1)
            if exponent == 0:
                raise WordParseError(f"zero exponent on {generator}", 1)

    @classmethod
    def parse(cls, text: str) -> "PresentationWord":
        """Parse ``A B^-1 r``; an empty string is the empty word."""
        tokens = []
        for match in re.finditer(r"\S+", text):
            token = _TOKEN.fullmatch(match.group())
            if token is None:
                raise WordParseError(f"unexpected token {match.group()!r}", match.start() + 1)
            exponent = int(token.group(2)) if token.group(2) else 1
            if exponent == 0:
                raise WordParseError(f"zero exponent in {match.group()!r}", match.start() + 1)
            tokens.append((token.group(1), exponent))
        return cls(tuple(tokens))

    def inverse(self) -> "PresentationWord":
        return PresentationWord(tuple((g, -e) for g, e in reversed(self.tokens)))

    def __mul__(self, other: "PresentationWord") -> "PresentationWord":
        return PresentationWord(self.tokens + other.tokens)

    def __pow__(self, exponent: int) -> "PresentationWord":
        base = self if exponent >= 0 else self.inverse()
        return PresentationWord(base.tokens * abs(exponent))

    def __str__(self) -> str:
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.tokens)


@dataclass(frozen=True)
class MatrixRep:
    """Integer matrices for A, B (determinant 1) and r (determinant -1)."""

    a: ImmutableMatrix
    b: ImmutableMatrix
    r: ImmutableMatrix

    @classmethod
    def load(cls, a: list[list[int]], b: list[list[int]], r: list[list[int]]) -> "MatrixRep":
        """Build a representation and reject it unless every relation holds.

        Raises:
            RepresentationError: If a determinant is wrong or a relation fails.
        """
        rep = cls(ImmutableMatrix(a), ImmutableMatrix(b), ImmutableMatrix(r))
        if rep.a.det() != 1 or rep.b.det() != 1 or rep.r.det() != -1:
            raise RepresentationError("A and B need determinant 1 and r determinant -1")
        report = verify_relations(rep)
        if not report.all_hold:
            failed = ", ".join(check.relation for check in report.checks if not check.holds)
            raise RepresentationError(f"relations fail: {failed}")
        return rep

    def matrix(self, generator: str) -> ImmutableMatrix:
        return {"A": self.a, "B": self.b, "r": self.r}[generator]


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    holds: bool


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking each relation of the presentation."""

    checks: tuple[RelationCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)


def evaluate(w: PresentationWord, rep: MatrixRep) -> ImmutableMatrix:
    """Exact product of the matrices along ``w``."""
    result = ImmutableMatrix(eye(2))
    for generator, exponent in w.tokens:
        result = result * rep.matrix(generator) ** exponent
    return ImmutableMatrix(result)


RELATIONS = (
    ("ABA = BAB", PresentationWord.parse("A B A"), PresentationWord.parse("B A B")),
    ("(AB)^6 = 1", PresentationWord.parse("A B") ** 6, PresentationWord(())),
    ("r^2 = 1", PresentationWord.parse("r r"), PresentationWord(())),
    ("rAr = A^-1", PresentationWord.parse("r A r"), PresentationWord.parse("A^-1")),
    ("rBr = B^-1", PresentationWord.parse("r B r"), PresentationWord.parse("B^-1")),
)


def verify_relations(rep: MatrixRep) -> RelationReport:
    """Evaluate both sides of every relation; failures are reported, not raised."""
    checks = tuple(
        RelationCheck(name, evaluate(left, rep) == evaluate(right, rep))
        for name, left, right in RELATIONS
    )
    return RelationReport(checks)


DEFAULT_REP = MatrixRep.load(
    a=[[1, 1], [0, 1]],
    b=[[1, 0], [-1, 1]],
    r=[[-1, 0], [0, 1]],
)


def example_book(n: int = 1) -> OpenBook:
    """The open book (Σ_{1,1}, t_∂^n)."""
    surface = SurfaceSig(1, 1)
    return OpenBook(surface, twist(surface, "td", n))


def to_mapping_class(w: PresentationWord, surface: SurfaceSig | None = None) -> MappingClass:
    """The class of a word in A, B under A ↦ t_a, B ↦ t_b.

    Raises:
        RepresentationError: If ``w`` uses r.
    """
    surface = surface or SurfaceSig(1, 1)
    names = {"A": "ta", "B": "tb"}
    f = identity(surface)
    for generator, exponent in w.tokens:
        if generator not in names:
            raise RepresentationError("only words in A and B correspond to page classes")
        f = compose(f, twist(surface, names[generator], exponent))
    return f


def crosscheck_with_mcg(
    w: PresentationWord,
    n: int = 1,
    rep: MatrixRep = DEFAULT_REP,
    bound: int = DEFAULT_KERNEL_BOUND,
) -> bool:
    """Whether matrix triviality of ``w`` agrees with triviality of F(w) in G_bind."""
    book = example_book(n)
    matrix_trivial = evaluate(w, rep) == eye(2)
    f = to_mapping_class(w, book.surface)
    quotient_trivial = gbind_equal(f, identity(book.surface), book, bound)
    if matrix_trivial != quotient_trivial:
        logger.warning(
            "Models disagree on %s: matrix trivial=%s, G_bind trivial=%s",
            w,
            matrix_trivial,
            quotient_trivial,
        )
    return matrix_trivial == quotient_trivial


def random_presentation_word(rng: random.Random, max_len: int = 12) -> PresentationWord:
    """A random word in A^{±1}, B^{±1} of length at most ``max_len``."""
    length = rng.randint(0, max_len)
    tokens = tuple((rng.choice("AB"), rng.choice((1, -1))) for _ in range(length))
    return PresentationWord(tokens)


@dataclass(frozen=True)
class RActionCheck:
    """r ∘ F(f) ∘ r = F(f^-1) for one generator."""

    name: str
    holds: bool


@dataclass(frozen=True)
class RActionReport:
    """Conjugation action of the binding-reversing element r.

    Attributes:
        reversing_valid: Whether (id, id, ι) passes the reversal check.
        checks: One entry per tested class.
    """

    reversing_valid: bool
    checks: tuple[RActionCheck, ...]

    @property
    def all_hold(self) -> bool:
        return self.reversing_valid and all(check.holds for check in self.checks)


def verify_r_action(n: int = 1, bound: int = DEFAULT_KERNEL_BOUND) -> RActionReport:
    """Check that r conjugates F(t_a), F(t_b) and F(id) to the inverse classes."""
    book = example_book(n)
    surface = book.surface
    iota = involution(surface, "std")
    trivial = identity(surface)
    r = GoeritzCandidate.reversing(trivial, trivial, iota)
    reversing_valid = check_binding_reversing(build_diagram(book), r).verdict

    checks = []
    for name in ("ta", "tb", "id"):
        f = trivial if name == "id" else twist(surface, name, 1)
        conjugated = conjugate_candidate(r, lift_to_goeritz(f, book))
        expected = lift_to_goeritz(inverse(f), book)
        holds = gbind_equal(conjugated.first, expected.first, book, bound) and gbind_equal(
            conjugated.second, expected.second, book, bound
        )
        checks.append(RActionCheck(name, holds))
    report = RActionReport(reversing_valid, tuple(checks))
    logger.info("r-action check n=%d: %s", n, report.all_hold)
    return report
