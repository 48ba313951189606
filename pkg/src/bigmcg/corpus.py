"""Named surfaces used by the tests, the acceptance run and the CLI examples."""

from __future__ import annotations

from .exprs import SurfaceSpec
from .grammar import parse_surface

LADDER = "surface(genus=inf, ends=ptG + ptG)"
FLUTE = "surface(genus=0, ends=ord(1,2))"
DOUBLY_POINTED_OMEGA_OMEGA = "surface(genus=0, ends=ord(w,2))"
CANTOR_PLUS_POINT = "surface(genus=0, ends=cantor + pt)"
CANTOR_TREE = "surface(genus=0, ends=cantor)"
GENUS_THREE = "surface(genus=3, ends=ord(1,2))"
THREE_ENDED_LADDER = "surface(genus=inf, ends=ptG + ptG + ptG)"

# (text, expected verdict label)
VERDICT_TABLE = [
    (LADDER, "Translatable"),
    (FLUTE, "Translatable"),
    (DOUBLY_POINTED_OMEGA_OMEGA, "NotCBGenerated"),
    (CANTOR_PLUS_POINT, "NoCurveGraphQI(MaximalEndsNotAllEquivalent)"),
    (CANTOR_TREE, "CoarselyBounded"),
    (GENUS_THREE, "NoCurveGraphQI(FinitePositiveGenus)"),
    (THREE_ENDED_LADDER, "NoCurveGraphQI(ThreeToFinitelyManyMaximal)"),
]

TRANSLATABLE = [
    LADDER,
    FLUTE,
    "surface(genus=0, ends=ord(2,2))",
    "surface(genus=0, ends=ord(3,2))",
    "surface(genus=0, ends=ord(w+1,2))",
    "surface(genus=0, ends=ord(w^2+1,2))",
    "surface(genus=inf, ends=omegaG(pt) + omegaG(pt))",
    "surface(genus=inf, ends=omegaG(ord(1,1)) + omegaG(ord(1,1)))",
    "surface(genus=inf, ends=omegaG(pt + ptG) + omegaG(pt + ptG))",
    "surface(genus=0, ends=omega(pt + cantor) + omega(pt + cantor))",
    "surface(genus=0, ends=omega(ord(1,1) + cantor) + omega(ord(1,1) + cantor))",
    "surface(genus=inf, ends=omegaG(cantor) + omegaG(cantor))",
    "surface(genus=inf, ends=omegaG(ptG + cantor) + omegaG(ptG + cantor))",
    "surface(genus=inf, ends=omegaG(omegaG(ptG)) + omegaG(omegaG(ptG)))",
]

# Translatable surfaces whose segment has no finite maximal class.
EDGE_CASES = [
    CANTOR_TREE,
    "surface(genus=inf, ends=cantorG)",
    "surface(genus=inf, ends=omegaG(cantor + cantorG) + omegaG(cantor + cantorG))",
]


def load(text: str) -> SurfaceSpec:
    return parse_surface(text)
