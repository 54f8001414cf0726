"""Boundary-fixing mapping classes of Σ_{g,b} acting on a free group.

Generator convention for Σ_{g,b} (b ≥ 1), rank n = 2g + b - 1, basepoint on the
b-th boundary component::

    a_k = x_{2k-1}, b_k = x_{2k}     (k = 1..g, dual to the handle arcs)
    c_j = x_{2g+j}                   (j = 1..b-1, loop around the j-th inner boundary)
    ∂   = [a_1,b_1]...[a_g,b_g] c_1...c_{b-1},   [a,b] = a b a^-1 b^-1

A mapping class is its action on these generators together with one tail word per
inner boundary component, the loop f(τ_j)·τ_j^-1 of a fixed arc τ_j from the basepoint
to that component. Action and tails together determine the class rel boundary.

Twist words such as ``ta tb^-1 td^2`` compose right to left: the rightmost twist is
applied first.
"""

import logging
import re
from dataclasses import dataclass, field
from enum import Enum

from sympy import Matrix, eye, zeros

from goeritz_ob.core.words import Endomorphism, Word, invert, parse_letters, reduce, unwrap
from goeritz_ob.core.words import compose as compose_maps
from goeritz_ob.errors import (
    CatalogError,
    InvalidMappingClassError,
    OrientationError,
    RankMismatchError,
    SurfaceMismatchError,
    WordParseError,
)

logger = logging.getLogger(__name__)

DEFAULT_KERNEL_BOUND = 8

_TWIST_TOKEN = re.compile(r"t([abcd])(\d*)(?:\^(-?\d+))?")


@dataclass(frozen=True)
class SurfaceSig:
    """Signature of a compact oriented surface Σ_{g,b}."""

    genus: int
    boundary: int

    def __post_init__(self):
        if self.genus < 0:
            raise SurfaceMismatchError(f"genus must be non-negative, got {self.genus}")
        if self.boundary < 1:
            raise SurfaceMismatchError("closed pages (b = 0) are not supported")

    @property
    def rank(self) -> int:
        return 2 * self.genus + self.boundary - 1

    def a(self, k: int) -> int:
        """Generator index of a_k."""
        self._check_handle(k)
        return 2 * k - 1

    def b(self, k: int) -> int:
        """Generator index of b_k."""
        self._check_handle(k)
        return 2 * k

    def c(self, j: int) -> int:
        """Generator index of the inner boundary loop c_j."""
        if not 1 <= j < self.boundary:
            raise CatalogError(f"no inner boundary component {j} on {self}")
        return 2 * self.genus + j

    def boundary_word(self) -> Word:
        """The outer boundary ∂ = Π[a_k, b_k] · c_1...c_{b-1}."""
        letters: list[int] = []
        for k in range(1, self.genus + 1):
            a, b = self.a(k), self.b(k)
            letters.extend([a, b, -a, -b])
        letters.extend(self.c(j) for j in range(1, self.boundary))
        return Word(tuple(letters), self.rank)

    def _check_handle(self, k: int) -> None:
        if not 1 <= k <= self.genus:
            raise CatalogError(f"no handle {k} on {self}")

    def __str__(self) -> str:
        return f"g={self.genus} b={self.boundary}"


class Orientation(str, Enum):
    """Orientation behaviour of a surface homeomorphism."""

    PRESERVING = "preserving"
    REVERSING = "reversing"

    def __mul__(self, other: "Orientation") -> "Orientation":
        if self == other:
            return Orientation.PRESERVING
        return Orientation.REVERSING


def _normalize(e: Endomorphism) -> Endomorphism:
    return Endomorphism(tuple(reduce(image) for image in e.images), e.rank)


@dataclass(frozen=True)
class MappingClass:
    """A mapping class of Σ_{g,b} fixing the boundary.

    Attributes:
        surface: The page signature.
        action: Images of the free generators.
        inverse_action: Images of the free generators under the inverse class.
        orientation: Whether the class preserves or reverses orientation.
        tails: One word per inner boundary component (b - 1 in total).
        label: Display name, usually the twist word it was parsed from.
    """

    surface: SurfaceSig
    action: Endomorphism
    inverse_action: Endomorphism
    orientation: Orientation = Orientation.PRESERVING
    tails: tuple[Word, ...] = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        rank = self.surface.rank
        if self.action.rank != rank or self.inverse_action.rank != rank:
            raise RankMismatchError(f"action rank does not match rank {rank} of {self.surface}")
        object.__setattr__(self, "action", _normalize(self.action))
        object.__setattr__(self, "inverse_action", _normalize(self.inverse_action))

        inner = self.surface.boundary - 1
        tails = tuple(self.tails) or tuple(Word.empty(rank) for _ in range(inner))
        if len(tails) != self.surface.boundary - 1:
            raise InvalidMappingClassError(
                f"{self.surface} needs {self.surface.boundary - 1} tail words, got {len(tails)}"
            )
        object.__setattr__(self, "tails", tuple(reduce(tail) for tail in tails))
        self._validate()

    def _validate(self) -> None:
        identity = Endomorphism.identity(self.surface.rank)
        if (
            compose_maps(self.action, self.inverse_action) != identity
            or compose_maps(self.inverse_action, self.action) != identity
        ):
            raise InvalidMappingClassError("inverse images do not invert the action")

        boundary = self.surface.boundary_word()
        expected = boundary if self.is_preserving else invert(boundary)
        if self.action(boundary) != reduce(expected):
            raise InvalidMappingClassError(f"action does not fix the boundary word {boundary}")

        sign = 1 if self.is_preserving else -1
        for j, tail in enumerate(self.tails, start=1):
            loop = Word((sign * self.surface.c(j),), self.surface.rank)
            if self.action(loop) != reduce(tail * loop * invert(tail)):
                raise InvalidMappingClassError(f"tail {tail} inconsistent with the image of c_{j}")

    @property
    def is_preserving(self) -> bool:
        return self.orientation == Orientation.PRESERVING

    @property
    def size(self) -> int:
        """Total letter count of all images and tails."""
        return sum(len(image) for image in self.action.images) + sum(len(t) for t in self.tails)

    def image(self, index: int) -> Word:
        return self.action.image(index)

    def tail(self, j: int) -> Word:
        return self.tails[j - 1]

    def __call__(self, w: Word) -> Word:
        return self.action(w)

    def __str__(self) -> str:
        return self.label or str(self.action)


def _check_same_surface(*classes: MappingClass) -> None:
    surfaces = {f.surface for f in classes}
    if len(surfaces) > 1:
        raise SurfaceMismatchError(
            "mapping classes on different surfaces: " + ", ".join(sorted(map(str, surfaces)))
        )


def _check_preserving(*classes: MappingClass) -> None:
    for f in classes:
        if not f.is_preserving:
            raise OrientationError(f"orientation-reversing class {f} is not allowed here")


def identity(surface: SurfaceSig) -> MappingClass:
    e = Endomorphism.identity(surface.rank)
    return MappingClass(surface, e, e, label="id")


def compose(f: MappingClass, h: MappingClass) -> MappingClass:
    """The class f ∘ h (apply h first).

    Raises:
        SurfaceMismatchError: If f and h live on different surfaces.
    """
    _check_same_surface(f, h)
    tails = tuple(reduce(f(th) * tf) for th, tf in zip(h.tails, f.tails))
    label = " ".join(part for part in (f.label, h.label) if part and part != "id")
    return MappingClass(
        f.surface,
        compose_maps(f.action, h.action),
        compose_maps(h.inverse_action, f.inverse_action),
        f.orientation * h.orientation,
        tails,
        label=label or "id",
    )


def inverse(f: MappingClass) -> MappingClass:
    inv = f.inverse_action
    tails = tuple(invert(inv(tail)) for tail in f.tails)
    return MappingClass(f.surface, inv, f.action, f.orientation, tails, label=f"({f.label})^-1")


def power(f: MappingClass, exponent: int) -> MappingClass:
    base = f if exponent >= 0 else inverse(f)
    result = identity(f.surface)
    for _ in range(abs(exponent)):
        result = compose(result, base)
    return result


def equality(f: MappingClass, g: MappingClass) -> bool:
    """Whether f and g are isotopic rel boundary, i.e. act identically.

    Raises:
        SurfaceMismatchError: If f and g live on different surfaces.
        OrientationError: If either class reverses orientation.
    """
    _check_same_surface(f, g)
    _check_preserving(f, g)
    return f.action == g.action and f.tails == g.tails


def commutes_with(f: MappingClass, phi: MappingClass) -> bool:
    return equality(compose(f, phi), compose(phi, f))


def homology_action(f: MappingClass) -> Matrix:
    """Action on H_1 of the page; column i is the image of x_i."""
    n = f.surface.rank
    matrix = zeros(n, n)
    for col, image in enumerate(f.action.images):
        for letter in image:
            matrix[abs(letter) - 1, col] += 1 if letter > 0 else -1
    return matrix


def intersection_form(surface: SurfaceSig) -> Matrix:
    """Algebraic intersection on H_1 in the generator basis; boundary loops are radical."""
    n = surface.rank
    form = zeros(n, n)
    for k in range(1, surface.genus + 1):
        a, b = surface.a(k) - 1, surface.b(k) - 1
        form[a, b] = 1
        form[b, a] = -1
    return form


def _handle_twist(surface: SurfaceSig, kind: str, k: int) -> MappingClass:
    rank = surface.rank
    a, b = surface.a(k), surface.b(k)
    forward = list(Endomorphism.identity(rank).images)
    backward = list(forward)
    if kind == "a":
        forward[b - 1] = Word((b, a), rank)
        backward[b - 1] = Word((b, -a), rank)
    else:
        forward[a - 1] = Word((a, -b), rank)
        backward[a - 1] = Word((a, b), rank)
    return MappingClass(
        surface,
        Endomorphism(tuple(forward), rank),
        Endomorphism(tuple(backward), rank),
        label=f"t{kind}{k}",
    )


def _chain_twist(surface: SurfaceSig, k: int) -> MappingClass:
    """Twist about the chain curve b_k^-1 a_{k+1} joining handles k and k + 1.

    With w = b_k^-1 a_{k+1}: a_k -> a_k w, b_{k+1} -> b_{k+1} w, and b_k, a_{k+1} are
    conjugated by w.
    """
    if not 1 <= k < surface.genus:
        raise CatalogError(f"no chain curve {k} on {surface}")
    rank = surface.rank
    a, b = surface.a(k), surface.b(k)
    p, q = surface.a(k + 1), surface.b(k + 1)
    forward = list(Endomorphism.identity(rank).images)
    backward = list(forward)
    forward[a - 1] = Word((a, -b, p), rank)
    forward[b - 1] = Word((-p, b, p), rank)
    forward[p - 1] = Word((-p, b, p, -b, p), rank)
    forward[q - 1] = Word((q, -b, p), rank)
    backward[a - 1] = Word((a, -p, b), rank)
    backward[b - 1] = Word((-b, p, b, -p, b), rank)
    backward[p - 1] = Word((-b, p, b), rank)
    backward[q - 1] = Word((q, -p, b), rank)
    return MappingClass(
        surface,
        Endomorphism(tuple(forward), rank),
        Endomorphism(tuple(backward), rank),
        label=f"tc{k}",
    )


def _boundary_twist(surface: SurfaceSig, j: int) -> MappingClass:
    rank = surface.rank
    if j == surface.boundary:
        d = surface.boundary_word()
        d_inv = invert(d)
        gens = Endomorphism.identity(rank).images
        return MappingClass(
            surface,
            Endomorphism(tuple(d_inv * x * d for x in gens), rank),
            Endomorphism(tuple(d * x * d_inv for x in gens), rank),
            tails=tuple(d_inv for _ in range(surface.boundary - 1)),
            label=f"td{j}",
        )
    if not 1 <= j < surface.boundary:
        raise CatalogError(f"no boundary component {j} on {surface}")
    tails = [Word.empty(rank) for _ in range(surface.boundary - 1)]
    tails[j - 1] = Word((-surface.c(j),), rank)
    e = Endomorphism.identity(rank)
    return MappingClass(surface, e, e, tails=tuple(tails), label=f"td{j}")


def _curve_homology(surface: SurfaceSig, kind: str, index: int) -> Matrix:
    vector = zeros(surface.rank, 1)
    if kind == "a":
        vector[surface.a(index) - 1] = 1
    elif kind == "b":
        vector[surface.b(index) - 1] = 1
    elif kind == "c":
        vector[surface.a(index + 1) - 1] = 1
        vector[surface.b(index) - 1] = -1
    return vector


def _transvection(surface: SurfaceSig, kind: str, index: int, exponent: int) -> Matrix:
    """H_1 action x ↦ x + exponent·ω(c, x)·c of a twist along c."""
    c = _curve_homology(surface, kind, index)
    return eye(surface.rank) + exponent * c * (c.T * intersection_form(surface))


def catalog_names(surface: SurfaceSig) -> list[str]:
    """Twist names understood by ``twist`` for this surface."""
    if surface == SurfaceSig(1, 1):
        return ["ta", "tb", "td"]
    names = [f"t{kind}{k}" for k in range(1, surface.genus + 1) for kind in "ab"]
    names += [f"tc{k}" for k in range(1, surface.genus)]
    names += [f"td{j}" for j in range(1, surface.boundary + 1)]
    return names


def _resolve_curve(surface: SurfaceSig, curve_id: str) -> tuple[str, int]:
    match = re.fullmatch(r"t?([abcd])(\d*)", curve_id)
    if match is None:
        raise CatalogError(f"unknown curve {curve_id!r} for {surface}")
    kind, digits = match.group(1), match.group(2)
    if digits:
        return kind, int(digits)
    if kind == "d" and surface.boundary == 1:
        return kind, 1
    if kind in "ab" and surface.genus == 1:
        return kind, 1
    if kind == "c" and surface.genus == 2:
        return kind, 1
    raise CatalogError(f"curve {curve_id!r} needs an index on {surface}")


def twist(surface: SurfaceSig, curve_id: str, exponent: int = 1) -> MappingClass:
    """The Dehn twist t_c^exponent about a catalog curve.

    Args:
        surface: The page signature.
        curve_id: ``ta<k>``, ``tb<k>``, ``tc<k>`` (k < g, see ``_chain_twist``) or ``td<j>``;
            on Σ_{1,1} plain ``ta``, ``tb``, ``td``.
            ``td<b>`` is the twist about the basepoint boundary component.
        exponent: Power of the right-handed twist.

    Returns:
        The mapping class of the twist power.

    Raises:
        CatalogError: If the curve is not in the catalog for this surface.
    """
    kind, index = _resolve_curve(surface, curve_id)
    if kind in "ab":
        single = _handle_twist(surface, kind, index)
    elif kind == "c":
        single = _chain_twist(surface, index)
    else:
        single = _boundary_twist(surface, index)
    if homology_action(single) != _transvection(surface, kind, index, 1):
        raise InvalidMappingClassError(f"catalog twist {curve_id} has the wrong homology action")
    result = power(single, exponent)
    label = single.label if surface != SurfaceSig(1, 1) else f"t{kind}"
    return MappingClass(
        result.surface,
        result.action,
        result.inverse_action,
        result.orientation,
        result.tails,
        label=label if exponent == 1 else f"{label}^{exponent}",
    )


def outer_boundary_twist(surface: SurfaceSig, exponent: int = 1) -> MappingClass:
    return twist(surface, f"td{surface.boundary}", exponent)


def boundary_twist_product(surface: SurfaceSig, exponents: tuple[int, ...]) -> MappingClass:
    """Π_j td_j^{k_j}; boundary twists commute, so order is irrelevant."""
    if len(exponents) != surface.boundary:
        raise CatalogError(f"{surface} needs {surface.boundary} exponents, got {len(exponents)}")
    result = identity(surface)
    for j, k in enumerate(exponents, start=1):
        if k:
            result = compose(result, twist(surface, f"td{j}", k))
    return result


def parse_twist_word(text: str, surface: SurfaceSig) -> MappingClass:
    """Parse a twist word such as ``ta tb^-1 td^2``; ``""`` and ``id`` are the identity.

    Raises:
        WordParseError: On a malformed token.
        CatalogError: On a token naming a curve outside the catalog.
    """
    result = identity(surface)
    for match in re.finditer(r"\S+", text):
        token = match.group()
        if token == "id":
            continue
        parsed = _TWIST_TOKEN.fullmatch(token)
        if parsed is None:
            raise WordParseError(f"unexpected twist token {token!r}", match.start() + 1)
        exponent = int(parsed.group(3)) if parsed.group(3) else 1
        curve = f"t{parsed.group(1)}{parsed.group(2)}"
        result = compose(result, twist(surface, curve, exponent))
    label = text.strip() or "id"
    return MappingClass(
        result.surface,
        result.action,
        result.inverse_action,
        result.orientation,
        result.tails,
        label,
    )


def custom_mapping_class(
    surface: SurfaceSig,
    images: list[Word],
    inverse_images: list[Word],
    tails: tuple[Word, ...] = (),
) -> MappingClass:
    """Build a preserving class from explicit generator images.

    Raises:
        InvalidMappingClassError: If the data is not an invertible boundary-fixing
            automorphism preserving the intersection form.
    """
    rank = surface.rank
    f = MappingClass(
        surface,
        Endomorphism(tuple(images), rank),
        Endomorphism(tuple(inverse_images), rank),
        tails=tails,
        label="custom",
    )
    m = homology_action(f)
    form = intersection_form(surface)
    if m.T * form * m != form:
        raise InvalidMappingClassError("action does not preserve the intersection form")
    return f


def _conjugator(image: Word, letter: int) -> Word | None:
    """The shortest u with image = u·letter·u^-1, if image is such a conjugate."""
    letters = image.letters
    half = len(letters) // 2
    if len(letters) % 2 == 0 or letters[half] != letter:
        return None
    if any(letters[i] != -letters[-1 - i] for i in range(half)):
        return None
    return Word(letters[:half], image.rank)


@dataclass(frozen=True)
class Involution:
    """An orientation-reversing involution of a page fixing each boundary component.

    Attributes:
        surface: The page signature.
        action: Images of the free generators.
        name: Catalog name or ``custom``.
        tails: One word u_j per inner boundary component, with ι(c_j) = u_j c_j^-1 u_j^-1.
            Derived from the action.
    """

    surface: SurfaceSig
    action: Endomorphism
    name: str = "custom"
    tails: tuple[Word, ...] = field(default=(), init=False)

    def __post_init__(self):
        if self.action.rank != self.surface.rank:
            raise RankMismatchError(f"involution rank {self.action.rank} on {self.surface}")
        object.__setattr__(self, "action", _normalize(self.action))
        if compose_maps(self.action, self.action) != Endomorphism.identity(self.surface.rank):
            raise InvalidMappingClassError(f"{self.name} is not involutive")
        boundary = self.surface.boundary_word()
        if self.action(boundary) != reduce(invert(boundary)):
            raise InvalidMappingClassError(f"{self.name} does not reverse the boundary word")
        tails = []
        for j in range(1, self.surface.boundary):
            c = self.surface.c(j)
            tail = _conjugator(self.action.image(c), -c)
            if tail is None:
                raise InvalidMappingClassError(f"{self.name} does not reverse the loop c_{j}")
            if reduce(self.action(tail) * tail):
                raise InvalidMappingClassError(f"{self.name} is not involutive around c_{j}")
            tails.append(tail)
        object.__setattr__(self, "tails", tuple(tails))

    def as_mapping_class(self) -> MappingClass:
        return MappingClass(
            self.surface,
            self.action,
            self.action,
            Orientation.REVERSING,
            self.tails,
            label=self.name,
        )


def involution(surface: SurfaceSig, name: str = "std") -> Involution:
    """A catalog involution.

    ``std`` reverses each a-direction and conjugates the b-direction (on Σ_{1,1}:
    x1 ↦ x1^-1, x2 ↦ x1 x2 x1^-1); it inverts every handle twist. ``swap`` exchanges
    the two directions of each handle. Both send Π[a_k, b_k] to its inverse P^-1 and
    c_j to (P c_1...c_{j-1}) c_j^-1 (P c_1...c_{j-1})^-1, so every inner boundary
    component is kept and reversed.

    Raises:
        CatalogError: If ``name`` is unknown.
    """
    if name not in ("std", "swap"):
        raise CatalogError(f"unknown involution {name!r}; choose std or swap")
    rank, g = surface.rank, surface.genus
    images: list[Word] = [Word.empty(rank)] * rank
    for k in range(1, g + 1):
        m = g + 1 - k
        a, b = surface.a(m), surface.b(m)
        if name == "std":
            images[surface.a(k) - 1] = Word((-a,), rank)
            images[surface.b(k) - 1] = Word((a, b, -a), rank)
        else:
            images[surface.a(k) - 1] = Word((b,), rank)
            images[surface.b(k) - 1] = Word((a,), rank)
    prefix = Word(surface.boundary_word().letters[: 4 * g], rank)
    for j in range(1, surface.boundary):
        c = surface.c(j)
        images[c - 1] = reduce(prefix * Word((-c,), rank) * invert(prefix))
        prefix = prefix * Word.generator(c, rank)
    return Involution(surface, Endomorphism(tuple(images), rank), name)


def parse_images(text: str, rank: int) -> list[Word]:
    """Parse ``images(w_1; w_2; ...)``, one word per generator.

    Raises:
        WordParseError: On malformed input or a wrong number of images.
    """
    body, offset = unwrap(text, "images")
    images: list[Word] = []
    column = offset
    for part in body.split(";"):
        letters = parse_letters(part, column)
        if any(abs(letter) > rank for letter in letters):
            message = f"image {part.strip()!r} leaves the rank {rank} alphabet"
            raise WordParseError(message, column + 1)
        images.append(Word(letters, rank))
        column += len(part) + 1
    if len(images) != rank:
        raise WordParseError(f"expected {rank} images, got {len(images)}", offset + 1)
    return images


def parse_involution(text: str, surface: SurfaceSig) -> Involution:
    """A catalog name (``std``, ``swap``) or custom ``images( ... )``."""
    if text.strip().startswith("images"):
        images = tuple(parse_images(text, surface.rank))
        return Involution(surface, Endomorphism(images, surface.rank))
    return involution(surface, text.strip())


def conjugate_by_involution(iota: Involution, f: MappingClass) -> MappingClass:
    """The class ι ∘ f ∘ ι.

    Raises:
        SurfaceMismatchError: If ι and f live on different surfaces.
    """
    if iota.surface != f.surface:
        raise SurfaceMismatchError(f"involution on {iota.surface}, class on {f.surface}")
    reflection = iota.as_mapping_class()
    return compose(compose(reflection, f), reflection)


class KernelStatus(str, Enum):
    """Outcome of the boundary-twist membership test."""

    MEMBER = "member"
    NOT_MEMBER = "not_member"
    INCONCLUSIVE = "inconclusive"  # bounded search exhausted


@dataclass(frozen=True)
class KernelResult:
    """Result of ``is_boundary_twist_product``.

    Attributes:
        status: Membership verdict.
        exponents: (k_1, ..., k_b) with k_b the basepoint component, when a member.
        bound: The exponent bound of the fallback search.
    """

    status: KernelStatus
    exponents: tuple[int, ...] | None
    bound: int

    @property
    def is_member(self) -> bool:
        return self.status == KernelStatus.MEMBER


def _power_of(word: Word, generator: int) -> int | None:
    if all(letter == generator for letter in word):
        return len(word)
    if all(letter == -generator for letter in word):
        return -len(word)
    return None


def is_boundary_twist_product(f: MappingClass, bound: int = DEFAULT_KERNEL_BOUND) -> KernelResult:
    """Decide whether f is a product of boundary twists.

    The H_1 action rules out most non-members. Otherwise f is descended by the
    outer boundary twist while the total image length shrinks, and the inner
    exponents are read off the tails. A bounded search over |k_j| ≤ bound backs
    up the rare cases the descent cannot settle.

    Raises:
        OrientationError: If f reverses orientation.
    """
    _check_preserving(f)
    surface = f.surface
    if homology_action(f) != eye(surface.rank):
        return KernelResult(KernelStatus.NOT_MEMBER, None, bound)

    outer = outer_boundary_twist(surface)
    outer_inv = inverse(outer)
    residual, k_outer = f, 0
    while True:
        down = compose(residual, outer_inv)
        up = compose(residual, outer)
        step, candidate = min(((1, down), (-1, up)), key=lambda pair: pair[1].size)
        if candidate.size >= residual.size:
            break
        residual, k_outer = candidate, k_outer + step
        logger.debug("Kernel descent: k_outer=%d size=%d", k_outer, residual.size)

    if residual.action == Endomorphism.identity(surface.rank):
        inner = [_power_of(tail, surface.c(j)) for j, tail in enumerate(residual.tails, start=1)]
        if all(m is not None for m in inner):
            exponents = tuple(-m for m in inner) + (k_outer,)
            if equality(f, boundary_twist_product(surface, exponents)):
                return KernelResult(KernelStatus.MEMBER, exponents, bound)
        elif surface.rank >= 2:
            return KernelResult(KernelStatus.NOT_MEMBER, None, bound)

    return _bounded_kernel_search(f, bound)


def _bounded_kernel_search(f: MappingClass, bound: int) -> KernelResult:
    surface = f.surface
    powers = {
        j: {k: twist(surface, f"td{j}", k) for k in range(-bound, bound + 1)}
        for j in range(1, surface.boundary + 1)
    }
    candidates: list[tuple[tuple[int, ...], MappingClass]] = [((), identity(surface))]
    for j in range(1, surface.boundary + 1):
        candidates = [
            (exps + (k,), compose(partial, powers[j][k]))
            for exps, partial in candidates
            for k in range(-bound, bound + 1)
        ]
    for exponents, candidate in candidates:
        if equality(f, candidate):
            return KernelResult(KernelStatus.MEMBER, exponents, bound)
    logger.warning("Boundary-twist search inconclusive within |k| <= %d for %s", bound, f)
    return KernelResult(KernelStatus.INCONCLUSIVE, None, bound)
