"""Exception hierarchy shared by the engines, the CLI and the API."""


class GoeritzError(Exception):
    """Base class for every error raised by goeritz-ob."""


class WordParseError(GoeritzError):
    """A word, cyclic word or twist word could not be parsed."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class RankMismatchError(GoeritzError):
    """Two objects over alphabets of different rank were combined."""


class SurfaceMismatchError(GoeritzError):
    """Mapping classes of different surfaces were combined."""


class OrientationError(GoeritzError):
    """An orientation-reversing class entered an orientation-preserving pipeline."""


class CatalogError(GoeritzError):
    """Unknown curve or involution for the given surface."""


class InvalidMappingClassError(GoeritzError):
    """The data does not define a boundary-fixing mapping class."""


class NonCommutingError(GoeritzError):
    """A class that was required to commute with the monodromy does not."""


class InconclusiveError(GoeritzError):
    """A bounded search ended without a certificate either way."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class PlanarDiagramError(GoeritzError):
    """Planar diagram data does not describe an embedded closed curve."""


class RouteDisagreementError(GoeritzError):
    """Engine route and formula route of the twisted binding word differ."""


class RepresentationError(GoeritzError):
    """A matrix model violates a defining relation."""
