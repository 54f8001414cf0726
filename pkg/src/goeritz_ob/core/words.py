"""Free-group words and cyclic words over a ranked alphabet.

Letters are signed integers: ``+i`` stands for ``x_i`` and ``-i`` for ``x_i^-1``.
Text grammar::

    x1 x2^-1 x3^2        a word (``1`` or the empty string is the empty word)
    cyc(x1 x2 x1^-1)     a cyclic word
    seq(x1 x1^-1)        an unreduced cyclic sequence
"""

import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from goeritz_ob.errors import RankMismatchError, WordParseError

logger = logging.getLogger(__name__)

Letter = int

_TOKEN = re.compile(r"x([1-9]\d*)(?:\^(-?[1-9]\d*))?")
_WRAPPED = re.compile(r"^\s*(\w+)\((.*)\)\s*$", re.DOTALL)


def letter_key(letter: Letter) -> tuple[int, bool]:
    """Ordering key: x1 < x1^-1 < x2 < x2^-1 < ..."""
    return (abs(letter), letter < 0)


def format_letter(letter: Letter) -> str:
    return f"x{letter}" if letter > 0 else f"x{-letter}^-1"


def format_letters(letters: Iterable[Letter]) -> str:
    """Space-separated tokens; the empty sequence formats as an empty string."""
    return " ".join(format_letter(letter) for letter in letters)


def _check_rank(letters: tuple[Letter, ...], rank: int) -> None:
    if rank < 0:
        raise RankMismatchError(f"rank must be non-negative, got {rank}")
    for letter in letters:
        if letter == 0 or abs(letter) > rank:
            raise RankMismatchError(f"letter {letter} outside alphabet of rank {rank}")


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _cyclic_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    reduced = _free_reduce(letters)
    start, end = 0, len(reduced)
    while end - start >= 2 and reduced[start] == -reduced[end - 1]:
        start += 1
        end -= 1
    return reduced[start:end]


def _least_rotation(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    if not letters:
        return letters
    keys = [letter_key(letter) for letter in letters]
    best = 0
    for i in range(1, len(letters)):
        if keys[i:] + keys[:i] < keys[best:] + keys[:best]:
            best = i
    return letters[best:] + letters[:best]


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters, not necessarily reduced.

    Attributes:
        letters: Signed generator indices.
        rank: Alphabet size; every letter index lies in 1..rank.
    """

    letters: tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        _check_rank(self.letters, self.rank)

    @classmethod
    def empty(cls, rank: int) -> "Word":
        return cls((), rank)

    @classmethod
    def generator(cls, index: int, rank: int) -> "Word":
        return cls((index,), rank)

    @property
    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Concatenate without reducing."""
        if other.rank != self.rank:
            raise RankMismatchError(f"cannot concatenate rank {self.rank} and {other.rank}")
        return Word(self.letters + other.letters, self.rank)

    def __pow__(self, exponent: int) -> "Word":
        base = self if exponent >= 0 else invert(self)
        return Word(base.letters * abs(exponent), self.rank)

    def __str__(self) -> str:
        return format_letters(self.letters) or "1"


@dataclass(frozen=True)
class CyclicWord:
    """A conjugacy class of the free group.

    Stored cyclically reduced and rotated to the least rotation under
    ``letter_key``, so equality and hashing are plain tuple comparisons.
    """

    letters: tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        letters = tuple(self.letters)
        _check_rank(letters, self.rank)
        object.__setattr__(self, "letters", _least_rotation(_cyclic_reduce(letters)))

    @classmethod
    def empty(cls, rank: int) -> "CyclicWord":
        return cls((), rank)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return f"cyc({format_letters(self.letters)})"


@dataclass(frozen=True)
class Endomorphism:
    """Images of the free generators x_1..x_rank.

    Attributes:
        images: One word per generator, in generator order.
        rank: Alphabet size of both source and target.
    """

    images: tuple[Word, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.rank:
            raise RankMismatchError(
                f"endomorphism of rank {self.rank} needs {self.rank} images, "
                f"got {len(self.images)}"
            )
        for image in self.images:
            if image.rank != self.rank:
                raise RankMismatchError(
                    f"image {image} has rank {image.rank}, expected {self.rank}"
                )

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(tuple(Word.generator(i, rank) for i in range(1, rank + 1)), rank)

    @classmethod
    def from_images(cls, images: Iterable[Word]) -> "Endomorphism":
        images = tuple(images)
        rank = images[0].rank if images else 0
        return cls(images, rank)

    def image(self, index: int) -> Word:
        """Image of the generator x_index (1-based)."""
        return self.images[index - 1]

    def __call__(self, w: Word) -> Word:
        return substitute(w, self)

    def __str__(self) -> str:
        return ", ".join(f"x{i} -> {image}" for i, image in enumerate(self.images, start=1))


def reduce(w: Word) -> Word:
    """Freely reduce a word."""
    return Word(_free_reduce(w.letters), w.rank)


def closure(w: Word) -> CyclicWord:
    """Join the end of ``w`` to its start and cyclically reduce."""
    return CyclicWord(w.letters, w.rank)


def reflect(w: Word | CyclicWord) -> Word | CyclicWord:
    """Flip the sign of every letter, keeping the order."""
    return type(w)(tuple(-letter for letter in w.letters), w.rank)


def invert(w: Word | CyclicWord) -> Word | CyclicWord:
    """Reverse the order and flip every sign."""
    return type(w)(tuple(-letter for letter in reversed(w.letters)), w.rank)


def substitute(w: Word, e: Endomorphism) -> Word:
    """Replace each x_i^{+-1} by the image of x_i to the same power, then reduce.

    Raises:
        RankMismatchError: If the ranks of ``w`` and ``e`` differ.
    """
    if w.rank != e.rank:
        raise RankMismatchError(f"word of rank {w.rank} substituted by rank {e.rank} map")
    letters: list[Letter] = []
    for letter in w.letters:
        image = e.images[abs(letter) - 1].letters
        if letter < 0:
            image = tuple(-x for x in reversed(image))
        letters.extend(image)
    return Word(_free_reduce(letters), w.rank)


def compose(second: Endomorphism, first: Endomorphism) -> Endomorphism:
    """The endomorphism ``second ∘ first`` (apply ``first``, then ``second``)."""
    if second.rank != first.rank:
        raise RankMismatchError(f"cannot compose rank {second.rank} with rank {first.rank}")
    return Endomorphism(tuple(substitute(image, second) for image in first.images), first.rank)


_GOF_FORMS = (
    CyclicWord((1, 2, -1, -2), 2),
    CyclicWord((1, -2, -1, 2), 2),
)


def is_gof_word(cw: CyclicWord) -> bool:
    """Whether ``cw`` is a rotation of x1 x2 x1^-1 x2^-1 or x1 x2^-1 x1^-1 x2.

    Raises:
        RankMismatchError: If ``cw`` is not over a rank-2 alphabet.
    """
    if cw.rank != 2:
        raise RankMismatchError(f"GOF recognition needs rank 2, got {cw.rank}")
    return cw in _GOF_FORMS


def parse_letters(text: str, offset: int = 0) -> tuple[Letter, ...]:
    """Tokenize ``x<k>`` / ``x<k>^<e>`` tokens.

    Args:
        text: Whitespace-separated tokens.
        offset: Column offset of ``text`` inside a larger input, for diagnostics.

    Raises:
        WordParseError: On the first malformed token, with its 1-based column.
    """
    letters: list[Letter] = []
    stripped = text.strip()
    if stripped == "1":
        return ()
    for match in re.finditer(r"\S+", text):
        token = _TOKEN.fullmatch(match.group())
        if token is None:
            raise WordParseError(f"unexpected token {match.group()!r}", offset + match.start() + 1)
        index = int(token.group(1))
        exponent = int(token.group(2)) if token.group(2) else 1
        letters.extend([index if exponent > 0 else -index] * abs(exponent))
    return tuple(letters)


def _infer_rank(letters: tuple[Letter, ...], rank: int | None) -> int:
    return max((abs(letter) for letter in letters), default=0) if rank is None else rank


def _parse_checked(text: str, rank: int | None, offset: int = 0) -> tuple[tuple[Letter, ...], int]:
    letters = parse_letters(text, offset)
    if rank is not None:
        for match in re.finditer(r"x([1-9]\d*)", text):
            if int(match.group(1)) > rank:
                raise WordParseError(
                    f"generator x{match.group(1)} outside alphabet of rank {rank}",
                    offset + match.start() + 1,
                )
    return letters, _infer_rank(letters, rank)


def unwrap(text: str, head: str) -> tuple[str, int]:
    """Strip a ``head( ... )`` wrapper, returning the body and its column offset.

    Raises:
        WordParseError: If ``text`` is not wrapped in ``head(...)``.
    """
    match = _WRAPPED.match(text)
    if match is None or match.group(1) != head:
        column = len(text) - len(text.lstrip()) + 1
        raise WordParseError(f"expected {head}( ... )", column)
    return match.group(2), match.start(2)


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse a word; the rank defaults to the largest generator index used."""
    letters, rank = _parse_checked(text, rank)
    return Word(letters, rank)


def parse_cyclic_word(text: str, rank: int | None = None) -> CyclicWord:
    """Parse ``cyc( ... )``."""
    body, offset = unwrap(text, "cyc")
    letters, rank = _parse_checked(body, rank, offset)
    return CyclicWord(letters, rank)
