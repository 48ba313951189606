"""Syntax trees for end spaces and surfaces, with deterministic printing."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

from .ordinals import Ordinal

INF = math.inf

Genus = Union[int, float]


class ExprError(ValueError):
    """An expression violates a structural invariant."""


class MarkingError(ExprError):
    """Genus markings are inconsistent with the declared genus or an apex."""


class Marking(enum.IntEnum):
    PLANAR = 0
    GENUS = 1

    def __str__(self) -> str:
        return self.name.lower()


PLANAR = Marking.PLANAR
GENUS = Marking.GENUS


@dataclass(frozen=True)
class Pt:
    marking: Marking = PLANAR

    def sort_key(self) -> tuple:
        return (0, int(self.marking))

    def __str__(self) -> str:
        return "ptG" if self.marking is GENUS else "pt"


@dataclass(frozen=True)
class Ord:
    """The countable space ``w^alpha * copies + 1``; always planar."""

    alpha: Ordinal
    copies: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha", Ordinal.of(self.alpha))
        if self.alpha < 1:
            raise ExprError("ord() needs alpha >= 1; use pt for isolated ends")
        if not isinstance(self.copies, int) or self.copies < 1:
            raise ExprError("ord() needs a positive number of copies")

    def sort_key(self) -> tuple:
        return (1, self.alpha.sort_key(), self.copies)

    def __str__(self) -> str:
        return f"ord({self.alpha},{self.copies})"


@dataclass(frozen=True)
class Omega:
    """One-point compactification of countably many copies of ``child``."""

    child: "EndExpr"
    apex: Marking = PLANAR

    def __post_init__(self):
        if has_genus(self.child) and self.apex is not GENUS:
            raise MarkingError("an apex accumulated by genus-marked ends must be genus-marked")

    def sort_key(self) -> tuple:
        return (2, self.child.sort_key(), int(self.apex))

    def __str__(self) -> str:
        name = "omegaG" if self.apex is GENUS else "omega"
        return f"{name}({self.child})"


@dataclass(frozen=True)
class Cantor:
    marking: Marking = PLANAR

    def sort_key(self) -> tuple:
        return (3, int(self.marking))

    def __str__(self) -> str:
        return "cantorG" if self.marking is GENUS else "cantor"


@dataclass(frozen=True)
class Sum:
    children: tuple["EndExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ExprError("a sum needs at least two summands")

    def sort_key(self) -> tuple:
        return (4, tuple(c.sort_key() for c in self.children))

    def __str__(self) -> str:
        return " + ".join(str(c) for c in self.children)


EndExpr = Union[Pt, Ord, Omega, Cantor, Sum]


def has_genus(e: EndExpr) -> bool:
    """True when some end of ``e`` is accumulated by genus."""
    if isinstance(e, (Pt, Cantor)):
        return e.marking is GENUS
    if isinstance(e, Ord):
        return False
    if isinstance(e, Omega):
        return e.apex is GENUS
    return any(has_genus(c) for c in e.children)


def has_cantor(e: EndExpr) -> bool:
    if isinstance(e, Cantor):
        return True
    if isinstance(e, Omega):
        return has_cantor(e.child)
    if isinstance(e, Sum):
        return any(has_cantor(c) for c in e.children)
    return False


def disjoint_union(parts: list[EndExpr]) -> EndExpr | None:
    """Flatten ``parts`` into one expression; ``None`` for the empty space."""
    flat: list[EndExpr] = []
    for p in parts:
        if p is None:
            continue
        flat.extend(p.children if isinstance(p, Sum) else (p,))
    if not flat:
        return None
    return flat[0] if len(flat) == 1 else Sum(tuple(flat))


def format_genus(genus: Genus) -> str:
    return "inf" if genus == INF else str(genus)


def _check_genus(genus: Genus) -> None:
    if genus != INF and (isinstance(genus, bool) or not isinstance(genus, int) or genus < 0):
        raise ExprError(f"genus must be a natural number or inf, got {genus!r}")


@dataclass(frozen=True)
class SurfaceSpec:
    """A surface up to homeomorphism: genus plus its marked end space."""

    genus: Genus
    ends: EndExpr

    def __post_init__(self):
        _check_genus(self.genus)
        if self.ends is None:
            raise ExprError("a surface needs a nonempty end space")
        if has_genus(self.ends) != (self.genus == INF):
            raise MarkingError(
                "ends accumulated by genus occur exactly when the genus is infinite"
                f" (genus={format_genus(self.genus)}, ends={self.ends})"
            )

    def __str__(self) -> str:
        return f"surface(genus={format_genus(self.genus)}, ends={self.ends})"


@dataclass(frozen=True)
class SegmentSpec:
    """A surface with two boundary circles; ``ends`` is ``None`` when compact."""

    genus: Genus
    ends: EndExpr | None = None

    def __post_init__(self):
        _check_genus(self.genus)
        marked = self.ends is not None and has_genus(self.ends)
        if marked and self.genus != INF:
            raise MarkingError("genus-marked ends force infinite genus")
        if self.genus == INF and not marked:
            raise MarkingError("infinite segment genus needs genus-marked ends")
        if self.ends is None and self.genus == 0:
            raise ExprError("a segment needs ends or positive genus")

    def __str__(self) -> str:
        ends = "empty" if self.ends is None else str(self.ends)
        return f"segment(genus={format_genus(self.genus)}, ends={ends})"
