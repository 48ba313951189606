"""Local homeomorphism types of ends and the summaries built from them.

Every end in the supported fragment has a stable neighborhood, so its germ
(the type of all sufficiently small clopen neighborhoods) is one of:

* a countable point of Cantor-Bendixson rank ``r`` (planar, or an isolated
  genus-marked end when ``r = 0``);
* a point of a uniformly marked Cantor set;
* the apex of a sequence of neighborhoods, recorded by the antichain of maximal
  germs accumulating onto it together with the apex marking.

Germ ``g`` precedes ``h`` exactly when a point of type ``g`` occurs in the
stable neighborhood of ``h``; that is what ``germ_leq`` computes.  A compact
space is homeomorphic to the disjoint union of stable neighborhoods of its
maximal points, so the map germ -> count over maximal germs is a complete
invariant (counts are finite or "many" for Cantor classes).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .exprs import (
    GENUS,
    PLANAR,
    Cantor,
    EndExpr,
    Marking,
    MarkingError,
    Omega,
    Ord,
    Pt,
    Sum,
    disjoint_union,
)
from .ordinals import ZERO, Ordinal


class GermKind(enum.IntEnum):
    COUNTABLE_RANK = 0
    OMEGA_APEX = 1
    CANTOR_POINT = 2

    @property
    def label(self) -> str:
        return {0: "CountableRank", 1: "OmegaApex", 2: "CantorPoint"}[int(self)]


class Many(enum.Enum):
    COUNTABLE = "countable"
    CANTOR = "cantor-many"

    def __str__(self) -> str:
        return self.value


Count = Union[int, Many]


def add_counts(a: Count, b: Count) -> Count:
    if a is Many.CANTOR or b is Many.CANTOR:
        return Many.CANTOR
    if a is Many.COUNTABLE or b is Many.COUNTABLE:
        return Many.COUNTABLE
    return a + b


@dataclass(frozen=True)
class Germ:
    kind: GermKind
    marking: Marking
    rank: Ordinal | None = None
    below: tuple["Germ", ...] = ()

    def sort_key(self) -> tuple:
        rank = self.rank.sort_key() if self.rank is not None else ()
        return (int(self.kind), int(self.marking), rank, tuple(g.sort_key() for g in self.below))

    @property
    def is_cantor(self) -> bool:
        return self.kind is GermKind.CANTOR_POINT

    @property
    def stable_form(self) -> EndExpr:
        return stable_form(self)

    @property
    def child(self) -> EndExpr | None:
        """For apex germs, the canonical expression repeated toward the apex."""
        if self.kind is not GermKind.OMEGA_APEX:
            return None
        return _union_of_forms(self.below)

    def __str__(self) -> str:
        mark = "G" if self.marking is GENUS else ""
        if self.kind is GermKind.COUNTABLE_RANK:
            return f"rank{mark}({self.rank})"
        if self.kind is GermKind.CANTOR_POINT:
            return f"cantor{mark}"
        return f"apex{mark}[{', '.join(str(g) for g in self.below)}]"


def rank_germ(rank: Ordinal | int, marking: Marking = PLANAR) -> Germ:
    rank = Ordinal.of(rank)
    if marking is GENUS and rank != ZERO:
        raise MarkingError("only isolated ends carry a genus marking among countable germs")
    return Germ(GermKind.COUNTABLE_RANK, marking, rank)


def cantor_germ(marking: Marking = PLANAR) -> Germ:
    return Germ(GermKind.CANTOR_POINT, marking)


@lru_cache(maxsize=None)
def germ_leq(a: Germ, b: Germ) -> bool:
    """``a`` precedes ``b``: a stable neighborhood of ``a`` embeds near ``b``."""
    if a == b:
        return True
    if b.kind is GermKind.COUNTABLE_RANK:
        return (
            a.kind is GermKind.COUNTABLE_RANK
            and a.marking is PLANAR
            and b.marking is PLANAR
            and a.rank < b.rank
        )
    if b.kind is GermKind.CANTOR_POINT:
        return False
    return any(germ_leq(a, s) for s in b.below)


def maximal_elements(germs: Iterable[Germ]) -> list[Germ]:
    pool = sorted(set(germs), key=Germ.sort_key)
    return [g for g in pool if not any(h != g and germ_leq(g, h) for h in pool)]


def apex_germ(accumulating: Iterable[Germ], marking: Marking) -> Germ:
    """Germ of the limit point of a sequence of copies of a space whose
    maximal germs are ``accumulating``."""
    top = maximal_elements(accumulating)
    if not top:
        raise ValueError("an apex needs a nonempty accumulating space")
    if any(g.marking is GENUS for g in top) and marking is not GENUS:
        raise MarkingError("an apex accumulated by genus-marked ends must be genus-marked")
    if len(top) == 1:
        (g,) = top
        if g.kind is GermKind.COUNTABLE_RANK and g.marking is PLANAR and marking is PLANAR:
            return rank_germ(g.rank + 1)
        if g.kind is GermKind.CANTOR_POINT and g.marking is marking:
            return g
    return Germ(GermKind.OMEGA_APEX, marking, None, tuple(top))


def _union_of_forms(germs: Iterable[Germ]) -> EndExpr:
    forms = sorted((stable_form(g) for g in germs), key=lambda f: f.sort_key())
    return disjoint_union(forms)


@lru_cache(maxsize=None)
def stable_form(g: Germ) -> EndExpr:
    if g.kind is GermKind.COUNTABLE_RANK:
        return Pt(g.marking) if g.rank == ZERO else Ord(g.rank, 1)
    if g.kind is GermKind.CANTOR_POINT:
        return Cantor(g.marking)
    return Omega(_union_of_forms(g.below), g.marking)


Summary = tuple[tuple[Germ, Count], ...]


@lru_cache(maxsize=None)
def summary(e: EndExpr) -> Summary:
    """Maximal germs of ``e`` with the number of ends of each type."""
    if isinstance(e, Pt):
        return ((rank_germ(0, e.marking), 1),)
    if isinstance(e, Ord):
        return ((rank_germ(e.alpha), e.copies),)
    if isinstance(e, Cantor):
        return ((cantor_germ(e.marking), Many.CANTOR),)
    if isinstance(e, Omega):
        g = apex_germ((germ for germ, _ in summary(e.child)), e.apex)
        return ((g, Many.CANTOR if g.is_cantor else 1),)
    if isinstance(e, Sum):
        counts: dict[Germ, Count] = {}
        for child in e.children:
            for germ, n in summary(child):
                counts[germ] = add_counts(counts.get(germ, 0), n)
        top = maximal_elements(counts)
        return tuple((g, counts[g]) for g in top)
    raise TypeError(f"not an end expression: {e!r}")


def render(entries: Iterable[tuple[Germ, Count]]) -> EndExpr:
    """The canonical expression with exactly the given maximal germs."""
    parts: list[EndExpr] = []
    for g, n in entries:
        if n is Many.CANTOR:
            parts.append(stable_form(g))
        elif g.kind is GermKind.COUNTABLE_RANK and g.rank != ZERO:
            parts.append(Ord(g.rank, n))
        else:
            parts.extend([stable_form(g)] * n)
    parts.sort(key=lambda f: f.sort_key())
    return disjoint_union(parts)
