"""Core engines: words, mapping classes, Heegaard diagrams, planar curves."""

from goeritz_ob.core.heegaard import (
    CheckReport,
    GoeritzCandidate,
    HeegaardDiagram,
    OpenBook,
    build_diagram,
    check_binding_reversing,
    check_gbind_membership,
    gbind_equal,
    lift_to_goeritz,
    reversal_criterion_search,
)
from goeritz_ob.core.mcg import Involution, MappingClass, SurfaceSig, twist
from goeritz_ob.core.planar import PlanarCurveDiagram, minimal_position, twist_along_cut
from goeritz_ob.core.words import CyclicWord, Endomorphism, Word

__all__ = [
    "CheckReport",
    "CyclicWord",
    "Endomorphism",
    "GoeritzCandidate",
    "HeegaardDiagram",
    "Involution",
    "MappingClass",
    "OpenBook",
    "PlanarCurveDiagram",
    "SurfaceSig",
    "Word",
    "build_diagram",
    "check_binding_reversing",
    "check_gbind_membership",
    "gbind_equal",
    "lift_to_goeritz",
    "minimal_position",
    "reversal_criterion_search",
    "twist",
    "twist_along_cut",
]
