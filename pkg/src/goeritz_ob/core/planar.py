"""Curves on the closed genus-two surface in a planar diagram.

Cutting the surface along l_1 = α_1 and l_2 = α_2 leaves a four-holed sphere with
boundary circles l1+, l1-, l2+, l2-; l_k+ is glued back to l_k- by
p+ = (offset_k - p-) mod m_k, which reverses the cyclic order of marked points.
A curve is a cyclic chain of strands. Strand i runs inside the sphere, then the
curve crosses a cut through the gluing to reach strand i + 1.

Three walls cut the sphere into a disk: w1 joins l1+ to l2-, w2 joins l2- to l1-
and w3 joins l1- to l2+. Each wall is attached to its circles in the gap between
the last and the first marked point. Walking once around the disk boundary reads

    l1+, w1 out, l2-, w2 out, l1-, w3 out, l2+, w3 back, w2 back, w1 back

with marked points in increasing order and wall crossings numbered from the
lower end of the wall (the end on its first circle). A strand records its wall
crossings in order as (letter, position); letter +k enters wall k from the out
side, -k from the back side. The walls fix the isotopy class of every strand, so
the hole a returning strand encircles is computed, not declared.

Letter conventions, all over rank 2:

- α side: a crossing from l_k- to l_k+ reads x_k, from l_k+ to l_k- reads x_k^-1.
- β side: each strand carries the β-letters it meets inside the sphere. A crossing
  may carry turns, loops parallel to l_k produced by twisting along l_k. A turn of
  sign +1 at gap g reads the β-reading of α_k from position g onward; a turn of
  sign -1 reads it backwards as inverses, starting just before g. The sign of a
  turn is the crossing sign times the stored twist direction.

Text format::

    cutsys genus2
    reading l1 seq(...)
    reading l2 seq(...)
    points l1+ 2
    ...
    glue l1+ l1- 1
    glue l2+ l2- 1
    strand l1+:1 l2-:0 word=(x1)
    cross l2 + gap=0 turns=()
    strand l1+:3 l1+:0 word=() walls=(1@0 -2@1)
    ...

A strandless curve is written with a single ``loop word=( ... )`` line.
"""

import logging
import random
import re
from dataclasses import dataclass, replace
from enum import Enum

from goeritz_ob.core.words import CyclicWord, format_letters, is_gof_word, parse_letters, unwrap
from goeritz_ob.errors import PlanarDiagramError, WordParseError

logger = logging.getLogger(__name__)

CIRCLES = ("l1+", "l1-", "l2+", "l2-")
# Boundary of the sphere cut open along the walls, read once around.
DISK_ORDER = ("l1+", "l2-", "l1-", "l2+")
WALLS = {1: ("l1+", "l2-"), 2: ("l2-", "l1-"), 3: ("l1-", "l2+")}

_LOW, _HIGH = "low", "high"
# Walls met by a path hugging a circle across its attachment gap, from the last
# marked point to the first, and the wall end each one sits at.
_ATTACHMENTS = {
    "l1+": ((1, _LOW),),
    "l2-": ((2, _LOW), (-1, _HIGH)),
    "l1-": ((3, _LOW), (-2, _HIGH)),
    "l2+": ((-3, _HIGH),),
}

WallCrossing = tuple[int, int]
Slot = tuple


class Side(str, Enum):
    """Which disk system a curve is read against."""

    ALPHA = "alpha"
    BETA = "beta"


def opposite(circle: str) -> str:
    return circle[:-1] + ("-" if circle.endswith("+") else "+")


def cut_of(circle: str) -> int:
    return int(circle[1])


@dataclass(frozen=True)
class Endpoint:
    """A marked point on a boundary circle."""

    circle: str
    position: int

    def __post_init__(self):
        if self.circle not in CIRCLES:
            raise PlanarDiagramError(f"unknown boundary circle {self.circle!r}")

    def __str__(self) -> str:
        return f"{self.circle}:{self.position}"


def _side(letter: int, arriving: bool) -> str:
    return "out" if (letter > 0) == arriving else "back"


@dataclass(frozen=True)
class Strand:
    """A chord of the four-holed sphere.

    Attributes:
        start: Where the curve enters the sphere.
        end: Where it leaves.
        word: β-letters met inside the sphere, in order.
        walls: Wall crossings in order, as (letter, position along the wall).
    """

    start: Endpoint
    end: Endpoint
    word: tuple[int, ...] = ()
    walls: tuple[WallCrossing, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "walls", tuple((int(a), int(p)) for a, p in self.walls))
        for letter, position in self.walls:
            if abs(letter) not in WALLS:
                raise PlanarDiagramError(f"invalid wall crossing {letter}@{position}")

    @property
    def returning(self) -> bool:
        return self.start.circle == self.end.circle

    def reversed(self) -> "Strand":
        return Strand(
            self.end,
            self.start,
            tuple(-x for x in reversed(self.word)),
            tuple((-a, p) for a, p in reversed(self.walls)),
        )

    def segments(self) -> list[tuple[Slot, Slot]]:
        """Pieces of the strand between consecutive boundary slots of the disk."""
        current: Slot = (self.start.circle, self.start.position)
        pieces = []
        for letter, position in self.walls:
            k = abs(letter)
            pieces.append((current, (_side(letter, True), k, position)))
            current = (_side(letter, False), k, position)
        pieces.append((current, (self.end.circle, self.end.position)))
        return pieces

    def hole_sides(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Holes a returning strand cuts off from its circle, then the other holes.

        Closing the strand up along its circle away from the wall gap, two holes
        joined by wall k are separated iff the strand crosses k an odd number of
        times.
        """
        if not self.returning:
            raise PlanarDiagramError(f"strand {self.start} -> {self.end} does not return")
        parity = {k: sum(1 for a, _ in self.walls if abs(a) == k) % 2 for k in WALLS}
        side = {self.start.circle: 0}
        while len(side) < len(CIRCLES):
            for k, (a, b) in WALLS.items():
                if a in side and b not in side:
                    side[b] = side[a] ^ parity[k]
                elif b in side and a not in side:
                    side[a] = side[b] ^ parity[k]
        others = [h for h in CIRCLES if h != self.start.circle]
        return tuple(h for h in others if side[h]), tuple(h for h in others if not side[h])

    @property
    def essential(self) -> bool:
        """Whether the strand returns to its circle with holes on both sides."""
        if not self.returning:
            return False
        far, near = self.hole_sides()
        return bool(far) and bool(near)

    @property
    def target(self) -> str | None:
        """The hole an essential returning strand separates from the other two."""
        if not self.essential:
            return None
        far, near = self.hole_sides()
        return far[0] if len(far) == 1 else near[0]


@dataclass(frozen=True)
class Crossing:
    """Passage through a gluing, with the twist loops recorded there."""

    gap: int = 0
    turns: tuple[int, ...] = ()


@dataclass(frozen=True)
class CutSystem:
    """The cut curves α_1, α_2 with their β-readings.

    Attributes:
        readings: readings[k-1] is the unreduced cyclic sequence of β-letters met
            along α_k.
    """

    readings: tuple[tuple[int, ...], tuple[int, ...]]

    def reading(self, cut: int) -> tuple[int, ...]:
        return self.readings[cut - 1]

    def reflected(self) -> "CutSystem":
        r1, r2 = self.readings
        return CutSystem((tuple(-x for x in r1), tuple(-x for x in r2)))


@dataclass(frozen=True)
class CyclicSequence:
    """An unreduced cyclic sequence of signed letters."""

    letters: tuple[int, ...]
    rank: int = 2

    def reduced(self) -> CyclicWord:
        return CyclicWord(self.letters, self.rank)

    def inverted(self) -> "CyclicSequence":
        return CyclicSequence(tuple(-x for x in reversed(self.letters)), self.rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return f"seq({format_letters(self.letters)})"


def parse_sequence(text: str, rank: int = 2) -> CyclicSequence:
    body, offset = unwrap(text, "seq")
    letters = parse_letters(body, offset)
    if any(abs(x) > rank for x in letters):
        raise WordParseError(f"sequence leaves the rank {rank} alphabet", offset + 1)
    return CyclicSequence(letters, rank)


def _expand(reading: tuple[int, ...], gap: int, sign: int) -> list[int]:
    """Letters of one loop along the cut, starting at ``gap``."""
    length = len(reading)
    if not length:
        return []
    if sign > 0:
        return [reading[(gap + t) % length] for t in range(length)]
    return [-reading[(gap - 1 - t) % length] for t in range(length)]


def _glue_point(points: tuple[int, ...], glue: tuple[int, ...], endpoint: Endpoint) -> Endpoint:
    other = opposite(endpoint.circle)
    m = points[CIRCLES.index(other)]
    return Endpoint(other, (glue[cut_of(endpoint.circle) - 1] - endpoint.position) % m)


def _wall_counts(strands) -> dict[int, int]:
    counts = dict.fromkeys(WALLS, 0)
    for strand in strands:
        for letter, _ in strand.walls:
            counts[abs(letter)] += 1
    return counts


def _boundary(points: tuple[int, ...], walls: dict[int, int]) -> list[Slot]:
    """Marked points and wall sides in order around the disk."""
    counts = dict(zip(CIRCLES, points))
    slots: list[Slot] = []
    for k, circle in zip((1, 2, 3, None), DISK_ORDER):
        slots.extend((circle, p) for p in range(counts[circle]))
        if k is not None:
            slots.extend(("out", k, p) for p in range(walls[k]))
    for k in (3, 2, 1):
        slots.extend(("back", k, p) for p in reversed(range(walls[k])))
    return slots


@dataclass(frozen=True)
class PlanarCurveDiagram:
    """A closed curve in the planar diagram of the cut system.

    Attributes:
        cuts: The cut system and its β-readings.
        points: Marked point counts, in ``CIRCLES`` order.
        glue: Gluing offsets of l1 and l2.
        strands: The strands in the order the curve traverses them.
        crossings: crossings[i] sits between strands[i] and strands[i + 1].
        loop: β-word of a curve that meets no cut curve.
    """

    cuts: CutSystem
    points: tuple[int, int, int, int]
    glue: tuple[int, int]
    strands: tuple[Strand, ...]
    crossings: tuple[Crossing, ...]
    loop: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "glue", tuple(self.glue))
        object.__setattr__(self, "strands", tuple(self.strands))
        object.__setattr__(self, "crossings", tuple(self.crossings))
        self._validate()

    def count(self, circle: str) -> int:
        return self.points[CIRCLES.index(circle)]

    def glued(self, endpoint: Endpoint) -> Endpoint:
        """The point on the opposite circle identified with ``endpoint``."""
        return _glue_point(self.points, self.glue, endpoint)

    def crossing_letter(self, i: int) -> int:
        """α-letter of the crossing after strand i."""
        end = self.strands[i].end
        k = cut_of(end.circle)
        return k if end.circle.endswith("-") else -k

    def _validate(self) -> None:
        if len(self.crossings) != len(self.strands):
            raise PlanarDiagramError("every strand needs exactly one following crossing")
        if self.strands and self.loop:
            raise PlanarDiagramError("a loop word is only allowed for strandless curves")
        for k in (1, 2):
            if self.count(f"l{k}+") != self.count(f"l{k}-"):
                raise PlanarDiagramError(f"l{k}+ and l{k}- carry different numbers of points")

        used: set[tuple[str, int]] = set()
        for strand in self.strands:
            for endpoint in (strand.start, strand.end):
                if not 0 <= endpoint.position < self.count(endpoint.circle):
                    raise PlanarDiagramError(f"point {endpoint} does not exist")
                key = (endpoint.circle, endpoint.position)
                if key in used:
                    raise PlanarDiagramError(f"point {endpoint} used twice")
                used.add(key)
        if len(used) != sum(self.points):
            raise PlanarDiagramError("some marked points are not used by the curve")

        for k in WALLS:
            positions = sorted(p for s in self.strands for a, p in s.walls if abs(a) == k)
            if positions != list(range(len(positions))):
                raise PlanarDiagramError(f"crossings with wall w{k} are not numbered 0, 1, ...")

        for i, strand in enumerate(self.strands):
            following = self.strands[(i + 1) % len(self.strands)]
            if self.glued(strand.end) != following.start:
                raise PlanarDiagramError(
                    f"strand {strand.end} is glued to {self.glued(strand.end)}, "
                    f"but the next strand starts at {following.start}"
                )
        self._validate_embedding()

    def _validate_embedding(self) -> None:
        slots = _boundary(self.points, _wall_counts(self.strands))
        index = {slot: i for i, slot in enumerate(slots)}
        chords = []
        for strand in self.strands:
            for a, b in strand.segments():
                i, j = index[a], index[b]
                chords.append((min(i, j), max(i, j)))
        for i, (a, b) in enumerate(chords):
            for c, d in chords[i + 1 :]:
                if a < c < b < d or c < a < d < b:
                    raise PlanarDiagramError("strands cross each other inside the sphere")


def cyclic_sequence(c: PlanarCurveDiagram, against: Side) -> CyclicSequence:
    """Signed crossings of the curve with one disk system, unreduced.

    Against β this is the reading of the diagram as drawn; bigons between the
    curve and the β-curves are not removed.
    """
    if against == Side.ALPHA:
        return CyclicSequence(tuple(c.crossing_letter(i) for i in range(len(c.strands))))
    if not c.strands:
        return CyclicSequence(c.loop)
    letters: list[int] = []
    for i, (strand, crossing) in enumerate(zip(c.strands, c.crossings)):
        letters.extend(strand.word)
        letter = c.crossing_letter(i)
        reading = c.cuts.reading(abs(letter))
        for turn in crossing.turns:
            sign = 1 if letter > 0 else -1
            letters.extend(_expand(reading, crossing.gap, sign * turn))
    return CyclicSequence(tuple(letters))


def cyclic_word(c: PlanarCurveDiagram, against: Side) -> CyclicWord:
    """Cyclic reduction of ``cyclic_sequence``; empty iff the curve bounds a disk."""
    return cyclic_sequence(c, against).reduced()


def is_gof(c: PlanarCurveDiagram, side: Side) -> bool:
    return is_gof_word(cyclic_word(c, side))


def _cancel_turns(turns: tuple[int, ...]) -> tuple[int, ...]:
    stack: list[int] = []
    for turn in turns:
        if stack and stack[-1] == -turn:
            stack.pop()
        else:
            stack.append(turn)
    return tuple(stack)


def _renumber(strands: list[Strand]) -> list[Strand]:
    """Number the crossings along each wall 0, 1, ... keeping their order."""
    rank = {}
    for k in WALLS:
        positions = sorted(p for s in strands for a, p in s.walls if abs(a) == k)
        rank[k] = {p: r for r, p in enumerate(positions)}
    return [
        replace(s, walls=tuple((a, rank[abs(a)][p]) for a, p in s.walls)) for s in strands
    ]


def _tighten(c: PlanarCurveDiagram) -> PlanarCurveDiagram | None:
    """Remove one bigon between a strand and a wall, if there is one."""
    for j, strand in enumerate(c.strands):
        walls = strand.walls
        for t in range(len(walls) - 1):
            (a, p), (b, q) = walls[t], walls[t + 1]
            if a == -b and abs(p - q) == 1:
                strands = list(c.strands)
                strands[j] = replace(strand, walls=walls[:t] + walls[t + 2 :])
                return replace(c, strands=tuple(_renumber(strands)))
    return None


def _find_cap(c: PlanarCurveDiagram) -> tuple[int, int] | None:
    """First strand bounding a bigon with its circle, and the gap the bigon covers."""
    m = len(c.strands)
    for i, strand in enumerate(c.strands):
        if not strand.returning or strand.essential or strand.word:
            continue
        if c.crossings[i].turns or c.crossings[(i - 1) % m].turns:
            continue
        size = c.count(strand.start.circle)
        low, high = sorted((strand.start.position, strand.end.position))
        far, _ = strand.hole_sides()
        if not far and not strand.walls and high - low == 1:
            return i, low
        if far and (low, high) == (0, size - 1):
            return i, size - 1
    return None


def _collar(circle: str, increasing: bool, counts: dict[int, int]) -> list[WallCrossing]:
    """Wall crossings of a path hugging ``circle`` across its wall gap."""
    crossings = [
        (letter, -1 if end == _LOW else counts[abs(letter)])
        for letter, end in _ATTACHMENTS[circle]
    ]
    if increasing:
        return crossings
    return [(-letter, position) for letter, position in reversed(crossings)]


def _shift(position: int, removed: list[int]) -> int:
    return position - sum(1 for r in removed if r < position)


def _remove_cap(c: PlanarCurveDiagram, i: int, gap: int) -> PlanarCurveDiagram:
    m = len(c.strands)
    cap = c.strands[i]
    prev_i, next_i = (i - 1) % m, (i + 1) % m
    prev, nxt = c.strands[prev_i], c.strands[next_i]
    circle, other = cap.start.circle, opposite(cap.start.circle)
    removed = {
        circle: [cap.start.position, cap.end.position],
        other: [prev.end.position, nxt.start.position],
    }
    points = tuple(
        count - (2 if name in removed else 0) for name, count in zip(CIRCLES, c.points)
    )

    if m == 2:
        return PlanarCurveDiagram(c.cuts, points, (0, 0), (), (), prev.word)

    cut = cut_of(circle)
    size = c.count(other)
    collar: list[WallCrossing] = []
    if (c.glue[cut - 1] - gap - 1) % size == size - 1:
        increasing = prev.end.position == size - 1
        collar = _collar(other, increasing, _wall_counts(c.strands))

    def moved(endpoint: Endpoint) -> Endpoint:
        if endpoint.circle not in removed:
            return endpoint
        return Endpoint(endpoint.circle, _shift(endpoint.position, removed[endpoint.circle]))

    walls = prev.walls + tuple(collar) + nxt.walls
    merged = Strand(prev.start, nxt.end, prev.word + nxt.word, walls)
    strands, crossings = [], []
    for k in range(m):
        if k in (i, next_i):
            continue
        strand = merged if k == prev_i else c.strands[k]
        strands.append(replace(strand, start=moved(strand.start), end=moved(strand.end)))
        crossings.append(c.crossings[next_i] if k == prev_i else c.crossings[k])
    strands = _renumber(strands)

    glue = list(c.glue)
    glue[cut - 1] = 0
    size = points[CIRCLES.index(circle)]
    for j, strand in enumerate(strands):
        if size and cut_of(strand.end.circle) == cut:
            start = strands[(j + 1) % len(strands)].start
            glue[cut - 1] = (strand.end.position + start.position) % size
            break
    return PlanarCurveDiagram(c.cuts, points, tuple(glue), tuple(strands), tuple(crossings))


def minimal_position(c: PlanarCurveDiagram) -> PlanarCurveDiagram:
    """Remove cancelling twist loops, then bigons with the walls and the cut curves.

    Wall bigons go first. Caps are removed innermost first, taking the first one
    along the curve.
    """
    crossings = tuple(replace(x, turns=_cancel_turns(x.turns)) for x in c.crossings)
    current = replace(c, crossings=crossings)
    while True:
        tightened = _tighten(current)
        if tightened is not None:
            current = tightened
            continue
        cap = _find_cap(current)
        if cap is None:
            return current
        i, gap = cap
        logger.debug("Removing bigon at strand %d (%s)", i, current.strands[i].start.circle)
        current = _remove_cap(current, i, gap)


def twist_along_cut(c: PlanarCurveDiagram, cut: int, power: int) -> PlanarCurveDiagram:
    """Apply t_{α_cut}^power, then normalize."""
    if cut not in (1, 2):
        raise PlanarDiagramError(f"cut must be 1 or 2, got {cut}")
    if not power:
        return c
    direction = 1 if power > 0 else -1
    crossings = []
    for i, crossing in enumerate(c.crossings):
        if abs(c.crossing_letter(i)) == cut:
            crossing = replace(crossing, turns=crossing.turns + (direction,) * abs(power))
        crossings.append(crossing)
    return minimal_position(replace(c, crossings=tuple(crossings)))


def reverse_orientation(c: PlanarCurveDiagram) -> PlanarCurveDiagram:
    """The same curve traversed backwards."""
    m = len(c.strands)
    strands = tuple(c.strands[m - 1 - k].reversed() for k in range(m))
    crossings = []
    for k in range(m):
        old = c.crossings[(m - 2 - k) % m]
        crossings.append(replace(old, turns=tuple(reversed(old.turns))))
    loop = tuple(-x for x in reversed(c.loop))
    return PlanarCurveDiagram(c.cuts, c.points, c.glue, strands, tuple(crossings), loop)


def reverse_beta_curves(c: PlanarCurveDiagram) -> PlanarCurveDiagram:
    """Reverse the orientation of the β-curves; every β-letter flips sign."""
    strands = tuple(replace(s, word=tuple(-x for x in s.word)) for s in c.strands)
    return PlanarCurveDiagram(
        c.cuts.reflected(),
        c.points,
        c.glue,
        strands,
        c.crossings,
        tuple(-x for x in c.loop),
    )


def _matching(rng: random.Random, low: int, high: int) -> list[tuple[int, int]]:
    """A random non-crossing perfect matching of low, ..., high - 1."""
    pairs, pending = [], [(low, high)]
    while pending:
        a, b = pending.pop()
        if a >= b:
            continue
        j = rng.randrange(a + 1, b, 2)
        pairs.append((a, j))
        pending.extend(((a + 1, j), (j + 1, b)))
    return pairs


def _chain(points, glue, strands: list[Strand]) -> list[Strand] | None:
    """Orient and order strands along the curve; None if it has several components."""
    by_endpoint = {}
    for index, strand in enumerate(strands):
        by_endpoint[strand.start] = index
        by_endpoint[strand.end] = index
    ordered, used = [strands[0]], {0}
    while True:
        start = _glue_point(points, glue, ordered[-1].end)
        index = by_endpoint[start]
        if index == 0:
            break
        strand = strands[index]
        ordered.append(strand if strand.start == start else strand.reversed())
        used.add(index)
    return ordered if len(used) == len(strands) else None


def random_curve(
    rng: random.Random, cuts: CutSystem, max_points: int = 3, max_crossings: int = 2
) -> PlanarCurveDiagram | None:
    """A random embedded curve, or None when the sample is not one closed curve.

    Chords of a random non-crossing matching of the disk boundary are joined
    across the walls and through random gluings. The curve carries no β-letters.
    """
    m1, m2 = rng.randint(0, max_points), rng.randint(0, max_points)
    points = (m1, m1, m2, m2)
    slots = _boundary(points, {k: rng.randint(0, max_crossings) for k in WALLS})
    if not m1 + m2:
        return None
    partner = {}
    for a, b in _matching(rng, 0, len(slots)):
        partner[slots[a]], partner[slots[b]] = slots[b], slots[a]

    strands, seen = [], set()
    for slot in slots:
        if len(slot) == 3 or slot in seen:
            continue
        crossings, current = [], slot
        while len(reached := partner[current]) == 3:
            side, k, position = reached
            crossings.append((k if side == "out" else -k, position))
            current = ("back" if side == "out" else "out", k, position)
            seen.update((reached, current))
        seen.update((slot, reached))
        strands.append(Strand(Endpoint(*slot), Endpoint(*reached), (), tuple(crossings)))
    if len(seen) != len(slots):
        return None

    glue = (rng.randrange(m1) if m1 else 0, rng.randrange(m2) if m2 else 0)
    ordered = _chain(points, glue, strands)
    if ordered is None:
        return None
    return PlanarCurveDiagram(cuts, points, glue, tuple(ordered), (Crossing(),) * len(ordered))


def balance_counts(c: PlanarCurveDiagram, i: int) -> tuple[int, int]:
    """Returning strands on l_i+ and on l_i-."""
    plus = sum(1 for s in c.strands if s.returning and s.start.circle == f"l{i}+")
    minus = sum(1 for s in c.strands if s.returning and s.start.circle == f"l{i}-")
    return plus, minus


def fact_balance(c: PlanarCurveDiagram, i: int) -> bool:
    """Whether as many strands return to l_i+ as to l_i-."""
    plus, minus = balance_counts(c, i)
    return plus == minus


def fact_reduced_trigger(s: CyclicSequence) -> bool:
    """Whether s contains y x^m y^-1 cyclically, with x ≠ y^{±1} and m ≠ 0."""
    letters, n = s.letters, len(s.letters)
    if n < 3:
        return False
    for i, first in enumerate(letters):
        middle = letters[(i + 1) % n]
        if abs(middle) == abs(first):
            continue
        m = 0
        while m < n - 2 and letters[(i + 1 + m) % n] == middle:
            m += 1
        if m and letters[(i + 1 + m) % n] == -first:
            return True
    return False


def fact_corresponding_arcs(c: PlanarCurveDiagram) -> bool:
    """Whether no essential strand encircles the other copy of its own circle, and
    all essential strands returning to one circle encircle the same hole."""
    targets: dict[str, str] = {}
    for strand in c.strands:
        target = strand.target
        if target is None:
            continue
        circle = strand.start.circle
        if target == opposite(circle) or targets.setdefault(circle, target) != target:
            return False
    return True


@dataclass(frozen=True)
class CorrespondingArc:
    """The hole a returning strand encircles.

    Attributes:
        circle: The circle the strand returns to.
        target: The encircled boundary circle.
        partition: Holes on the target's side, then the remaining holes.
    """

    circle: str
    target: str
    partition: tuple[tuple[str, ...], tuple[str, ...]]


def corresponding_arc(c: PlanarCurveDiagram, index: int) -> CorrespondingArc:
    """Corresponding arc of the returning strand ``c.strands[index]``.

    Raises:
        PlanarDiagramError: If the strand does not return to its circle, is a cap, or
            encircles the other copy of its own circle.
    """
    strand = c.strands[index]
    if not strand.returning:
        raise PlanarDiagramError(f"strand {index} joins two different circles")
    target = strand.target
    if target is None:
        raise PlanarDiagramError(f"strand {index} is inessential and has no corresponding arc")
    if target == opposite(strand.start.circle):
        raise PlanarDiagramError(
            f"strand {index} encircles only {target}, the other copy of its circle; "
            "the curve is not in minimal position"
        )
    rest = tuple(x for x in CIRCLES if x not in (strand.start.circle, target))
    return CorrespondingArc(strand.start.circle, target, ((target,), rest))


def _format_turns(turns: tuple[int, ...]) -> str:
    return "(" + " ".join(str(t) for t in turns) + ")"


def _format_walls(walls: tuple[WallCrossing, ...]) -> str:
    return "(" + " ".join(f"{a}@{p}" for a, p in walls) + ")"


def format_planar(c: PlanarCurveDiagram) -> str:
    """Serialize a diagram in the planar text format."""
    lines = ["cutsys genus2"]
    for k in (1, 2):
        lines.append(f"reading l{k} {CyclicSequence(c.cuts.reading(k))}")
    for circle, count in zip(CIRCLES, c.points):
        lines.append(f"points {circle} {count}")
    for k in (1, 2):
        lines.append(f"glue l{k}+ l{k}- {c.glue[k - 1]}")
    if not c.strands:
        lines.append(f"loop word=({format_letters(c.loop)})")
    for i, (strand, crossing) in enumerate(zip(c.strands, c.crossings)):
        line = f"strand {strand.start} {strand.end} word=({format_letters(strand.word)})"
        if strand.walls:
            line += f" walls={_format_walls(strand.walls)}"
        lines.append(line)
        letter = c.crossing_letter(i)
        sign = "+" if letter > 0 else "-"
        lines.append(
            f"cross l{abs(letter)} {sign} gap={crossing.gap} turns={_format_turns(crossing.turns)}"
        )
    return "\n".join(lines) + "\n"


_STRAND = re.compile(
    r"strand (l[12][+-]):(\d+) (l[12][+-]):(\d+) word=\(([^)]*)\)(?: walls=\(([^)]*)\))?"
)
_WALL = re.compile(r"(-?\d+)@(\d+)")
_CROSS = re.compile(r"cross l([12]) ([+-]) gap=(-?\d+) turns=\(([^)]*)\)")
_LOOP = re.compile(r"loop word=\(([^)]*)\)")


def _parse_endpoint(circle: str, position: str) -> Endpoint:
    return Endpoint(circle, int(position))


def _parse_walls(text: str | None) -> tuple[WallCrossing, ...]:
    walls = []
    for token in (text or "").split():
        match = _WALL.fullmatch(token)
        if match is None:
            raise PlanarDiagramError(f"malformed wall crossing {token!r}")
        walls.append((int(match.group(1)), int(match.group(2))))
    return tuple(walls)


def parse_planar(text: str) -> PlanarCurveDiagram:
    """Parse the planar text format.

    Raises:
        PlanarDiagramError: On malformed lines or inconsistent data.
        WordParseError: On malformed letters inside a word or reading.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "cutsys genus2":
        raise PlanarDiagramError("expected header 'cutsys genus2'")
    readings: dict[int, tuple[int, ...]] = {}
    points = dict.fromkeys(CIRCLES, 0)
    glue = [0, 0]
    strands: list[Strand] = []
    crossings: list[Crossing] = []
    signs: list[tuple[int, int]] = []
    loop: tuple[int, ...] = ()

    for number, line in enumerate(lines[1:], start=2):
        head = line.split()[0]
        try:
            if head == "reading":
                _, name, rest = line.split(maxsplit=2)
                readings[int(name[1])] = parse_sequence(rest).letters
            elif head == "points":
                _, circle, count = line.split()
                if circle not in points:
                    raise PlanarDiagramError(f"unknown circle {circle!r}")
                points[circle] = int(count)
            elif head == "glue":
                _, plus, _, offset = line.split()
                glue[cut_of(plus) - 1] = int(offset)
            elif head == "loop":
                match = _LOOP.fullmatch(line)
                if match is None:
                    raise PlanarDiagramError("malformed loop")
                loop = parse_letters(match.group(1))
            elif head == "strand":
                match = _STRAND.fullmatch(line)
                if match is None:
                    raise PlanarDiagramError("malformed strand")
                strands.append(
                    Strand(
                        _parse_endpoint(match.group(1), match.group(2)),
                        _parse_endpoint(match.group(3), match.group(4)),
                        parse_letters(match.group(5)),
                        _parse_walls(match.group(6)),
                    )
                )
            elif head == "cross":
                match = _CROSS.fullmatch(line)
                if match is None:
                    raise PlanarDiagramError("malformed crossing")
                turns = tuple(int(t) for t in match.group(4).split())
                crossings.append(Crossing(int(match.group(3)), turns))
                cut = int(match.group(1))
                signs.append((cut, 1 if match.group(2) == "+" else -1))
            else:
                raise PlanarDiagramError(f"unknown record {head!r}")
        except (PlanarDiagramError, WordParseError, ValueError) as e:
            raise PlanarDiagramError(f"line {number}: {e}") from e

    if set(readings) != {1, 2}:
        raise PlanarDiagramError("both readings l1 and l2 are required")
    diagram = PlanarCurveDiagram(
        CutSystem((readings[1], readings[2])),
        tuple(points[circle] for circle in CIRCLES),
        tuple(glue),
        tuple(strands),
        tuple(crossings),
        loop,
    )
    for i, (cut, sign) in enumerate(signs):
        if diagram.crossing_letter(i) != sign * cut:
            raise PlanarDiagramError(f"crossing {i + 1} does not match its strands")
    return diagram
