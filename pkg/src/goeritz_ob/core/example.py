"""The genus-two example: the open book (Σ_{1,1}, t_∂^n) doubled to a closed surface.

The Heegaard surface is cut along α_1, α_2. The binding runs through the planar
diagram as four strands, and reads [[x1, x2]] against the β-disks:

    A: l1+:1 -> l2-:0  word (x1)
    B: l2+:1 -> l1+:0  word (x2 x1^-1)
    C: l1-:1 -> l2+:0  word (x2^-1)
    D: l2-:1 -> l1-:0  word ()

The β-readings of α_1 and α_2 are taken from the open-book diagram. They equal
P_n = [[x2, x1]]^n [[x2^-1, x1]]^n and Q_n = [[x1^-1, x2]]^n [[x1, x2]]^n, so
t_{α_1}^u t_{α_2}^v moves the binding to a curve with β-word [[P_n^u x1, Q_n^v x2]].
"""

import logging
from dataclasses import dataclass

from goeritz_ob.core.heegaard import OpenBook, build_diagram
from goeritz_ob.core.mcg import SurfaceSig, twist
from goeritz_ob.core.planar import (
    Crossing,
    CutSystem,
    Endpoint,
    PlanarCurveDiagram,
    Side,
    Strand,
    cyclic_word,
    is_gof,
    twist_along_cut,
)
from goeritz_ob.core.words import CyclicWord, invert, is_gof_word
from goeritz_ob.errors import PlanarDiagramError, RouteDisagreementError

logger = logging.getLogger(__name__)

DEFAULT_CROSSING_BUDGET = 24

C1 = (2, 1, -2, -1)  # [[x2, x1]]
C2 = (-2, 1, 2, -1)  # [[x2^-1, x1]]
C3 = (-1, 2, 1, -2)  # [[x1^-1, x2]]
C4 = (1, 2, -1, -2)  # [[x1, x2]]


def _inverse(letters: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def _power(letters: tuple[int, ...], exponent: int) -> tuple[int, ...]:
    base = letters if exponent >= 0 else _inverse(letters)
    return base * abs(exponent)


def _check_exponent(n: int) -> None:
    if n == 0:
        raise PlanarDiagramError("the example needs a nonzero monodromy exponent n")


def _swap_letters(cw: CyclicWord) -> CyclicWord:
    return CyclicWord(tuple((3 - abs(x)) * (1 if x > 0 else -1) for x in cw), cw.rank)


def twist_loop_words(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The β-readings (P_n, Q_n) of α_1 and α_2."""
    _check_exponent(n)
    return _power(C1, n) + _power(C2, n), _power(C3, n) + _power(C4, n)


def openbook_readings(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The β-readings of α_1 and α_2 read off the open-book diagram of t_∂^n.

    Under x1 ↔ x2, α_2 reads the word of A_2 and α_1 the inverse of the word of A_1.
    Each is rotated to start at the gap where the binding crosses its cut.

    Raises:
        PlanarDiagramError: If n = 0.
    """
    _check_exponent(n)
    surface = SurfaceSig(1, 1)
    a1, a2 = build_diagram(OpenBook(surface, twist(surface, "td", n))).b_words
    p = invert(_swap_letters(a1)).letters
    q = _swap_letters(a2).letters
    g1, g2 = (3, 4 * n) if n > 0 else (0, 4 * abs(n) + 1)
    return p[g1:] + p[:g1], q[g2:] + q[:g2]


def build_example_diagram(n: int) -> PlanarCurveDiagram:
    """The binding of the example with monodromy t_∂^n, in the planar diagram.

    Raises:
        PlanarDiagramError: If n = 0.
    """
    p, q = openbook_readings(n)
    strands = (
        Strand(Endpoint("l1+", 1), Endpoint("l2-", 0), (1,)),
        Strand(Endpoint("l2+", 1), Endpoint("l1+", 0), (2, -1)),
        Strand(Endpoint("l1-", 1), Endpoint("l2+", 0), (-2,)),
        Strand(Endpoint("l2-", 1), Endpoint("l1-", 0), ()),
    )
    return PlanarCurveDiagram(
        cuts=CutSystem((p, q)),
        points=(2, 2, 2, 2),
        glue=(1, 1),
        strands=strands,
        crossings=(Crossing(),) * 4,
    )


def twisted_binding(u: int, v: int, n: int) -> PlanarCurveDiagram:
    """t_{α_1}^u ∘ t_{α_2}^v applied to the binding."""
    diagram = build_example_diagram(n)
    return twist_along_cut(twist_along_cut(diagram, 2, v), 1, u)


def formula_word(u: int, v: int, n: int) -> CyclicWord:
    """Closure of [[P_n^u x1, Q_n^v x2]]."""
    p, q = twist_loop_words(n)
    first = _power(p, u) + (1,)
    second = _power(q, v) + (2,)
    return CyclicWord(first + second + _inverse(first) + _inverse(second), 2)


def twisted_binding_word(u: int, v: int, n: int) -> CyclicWord:
    """β-word of t_{α_1}^u t_{α_2}^v(binding), computed by two independent routes.

    Raises:
        PlanarDiagramError: If n = 0.
        RouteDisagreementError: If the planar engine and the closed formula differ.
    """
    engine = cyclic_word(twisted_binding(u, v, n), Side.BETA)
    formula = formula_word(u, v, n)
    if engine != formula:
        raise RouteDisagreementError(
            f"u={u} v={v} n={n}: engine gives {engine}, formula gives {formula}"
        )
    return engine


@dataclass(frozen=True)
class RigidityCertificate:
    """Outcome of the bounded search for doubly-GOF curves in the twist orbit.

    Attributes:
        n: Monodromy exponent.
        budget: Largest β-word length admitted.
        box: Twist exponents range over |u|, |v| ≤ box.
        explored: Curves within the budget.
        doubly_gof: (u, v) of every curve that is GOF against both disk systems.
    """

    n: int
    budget: int
    box: int
    explored: int
    doubly_gof: tuple[tuple[int, int], ...]

    @property
    def only_binding(self) -> bool:
        return self.doubly_gof == ((0, 0),)


def rigidity_search(n: int, budget: int = DEFAULT_CROSSING_BUDGET) -> RigidityCertificate:
    """Enumerate t_{α_1}^u t_{α_2}^v(binding) within a crossing budget."""
    _check_exponent(n)
    box = max(1, budget // (8 * abs(n)))
    explored = 0
    found = []
    for u in range(-box, box + 1):
        for v in range(-box, box + 1):
            curve = twisted_binding(u, v, n)
            beta = cyclic_word(curve, Side.BETA)
            if len(beta) > budget:
                continue
            explored += 1
            if is_gof(curve, Side.ALPHA) and is_gof_word(beta):
                found.append((u, v))
    logger.info(
        "Rigidity search n=%d budget=%d: %d curves, doubly GOF at %s", n, budget, explored, found
    )
    return RigidityCertificate(n, budget, box, explored, tuple(found))


def readings_match_formula(n: int) -> bool:
    """Whether the open-book readings of α_1, α_2 are P_n and Q_n letter for letter."""
    return openbook_readings(n) == twist_loop_words(n)
