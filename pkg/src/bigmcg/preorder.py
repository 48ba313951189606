"""The preorder on ends: germs, maximal classes, predecessors and stable pieces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Union

from .endspace import canonicalize, clopen_embeds
from .exprs import PLANAR, Cantor, EndExpr, Omega, Ord, Pt, Sum
from .germs import (
    Count,
    Germ,
    GermKind,
    Many,
    add_counts,
    germ_leq,
    rank_germ,
    stable_form,
    summary,
)
from .ordinals import ZERO, Ordinal

__all__ = [
    "Count",
    "Germ",
    "GermKind",
    "GermSummary",
    "LimitChain",
    "Many",
    "NotMaximal",
    "RankInterval",
    "TameReport",
    "germ_leq",
    "germ_of_classes",
    "immediate_predecessors",
    "is_tame",
    "maximal_germs",
    "neighborhood_forms",
    "stable_partition",
]

CHAIN_PREFIX = 8


class NotMaximal(ValueError):
    pass


@dataclass(frozen=True)
class RankInterval:
    """Countably many planar ends of every rank in ``[0, upper)``."""

    upper: Ordinal

    def __str__(self) -> str:
        return f"ranks[0,{self.upper})"


@dataclass(frozen=True)
class GermSummary:
    entries: tuple[tuple[Germ, Count], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def germs(self) -> list[Germ]:
        return [g for g, _ in self.entries]

    def count(self, g: Germ) -> Count:
        return dict(self.entries)[g]

    def finite_total(self) -> int | None:
        """Number of maximal ends, or ``None`` if some class is a Cantor set."""
        if any(n is Many.CANTOR for _, n in self.entries):
            return None
        return sum(n for _, n in self.entries)


@dataclass(frozen=True)
class LimitChain:
    """A strictly increasing run of ranks, cofinal below a limit rank."""

    limit: Ordinal
    ranks: tuple[Ordinal, ...]

    @property
    def germs(self) -> list[Germ]:
        return [rank_germ(r) for r in self.ranks]

    def __str__(self) -> str:
        return "limit-chain(" + ", ".join(str(r) for r in self.ranks) + ", ...)"


@dataclass(frozen=True)
class TameReport:
    tame: bool
    witnesses: tuple[tuple[Germ, EndExpr], ...]

    def __bool__(self) -> bool:
        return self.tame


Descriptor = Union[tuple[Germ, Count], RankInterval]


def _spread(n: Count) -> Count:
    return Many.CANTOR if n is Many.CANTOR else Many.COUNTABLE


def germ_of_classes(e: EndExpr) -> list[Descriptor]:
    """Finitely many descriptors that together cover every end of ``e``."""
    counts: dict[Germ, Count] = {}
    intervals: set[Ordinal] = set()

    def walk(x: EndExpr, repeated: bool) -> None:
        if isinstance(x, Sum):
            for c in x.children:
                walk(c, repeated)
            return
        for g, n in summary(x):
            counts[g] = add_counts(counts.get(g, 0), _spread(n) if repeated else n)
        if isinstance(x, Ord):
            intervals.add(x.alpha)
        elif isinstance(x, Omega):
            walk(x.child, True)

    walk(canonicalize(e), False)
    entries: list[Descriptor] = sorted(counts.items(), key=lambda kv: kv[0].sort_key())
    entries.extend(RankInterval(a) for a in sorted(intervals, key=Ordinal.sort_key))
    return entries


def maximal_germs(e: EndExpr) -> GermSummary:
    return GermSummary(summary(canonicalize(e)))


def immediate_predecessors(e: EndExpr, m: Germ) -> list[Germ] | LimitChain:
    if m not in maximal_germs(e).germs:
        raise NotMaximal(f"{m} is not a maximal germ of {canonicalize(e)}")
    if m.kind is GermKind.OMEGA_APEX:
        return list(m.below)
    if m.kind is GermKind.CANTOR_POINT or m.rank == ZERO:
        return []
    if m.rank.is_successor():
        return [rank_germ(m.rank.predecessor())]
    return LimitChain(m.rank, tuple(islice(m.rank.fundamental_sequence(), CHAIN_PREFIX)))


def stable_partition(e: EndExpr) -> list[tuple[Germ, EndExpr]]:
    """One stable neighborhood per maximal end; a Cantor class is one piece."""
    pieces = []
    for g, n in maximal_germs(e):
        copies = 1 if n is Many.CANTOR else n
        pieces.extend([(g, stable_form(g))] * copies)
    return pieces


def _smaller_pieces(g: Germ) -> list[EndExpr]:
    """Clopen sets that can sit inside any neighborhood of an end of type ``g``."""
    if g.kind is GermKind.CANTOR_POINT:
        return [Cantor(g.marking)]
    if g.kind is GermKind.OMEGA_APEX:
        return [stable_form(b) for b in g.below]
    if g.rank == ZERO:
        return []
    lower = [Pt(PLANAR)]
    if g.rank.is_successor():
        below = g.rank.predecessor()
    else:
        below = next(g.rank.fundamental_sequence())
    if below >= 1:
        lower.append(Ord(below, 1))
    return lower


def neighborhood_forms(g: Germ, depth: int = 3) -> Iterator[EndExpr]:
    """Uncanonicalized shapes of ever smaller clopen neighborhoods of a ``g`` end."""
    base = stable_form(g)
    yield base
    frontier = [base]
    for _ in range(depth):
        grown = []
        for f in frontier:
            for extra in _smaller_pieces(g):
                grown.append(Sum((f, extra)))
        yield from grown
        frontier = grown


def is_tame(e: EndExpr) -> TameReport:
    """Every maximal germ and every immediate predecessor has a stable neighborhood.

    A form ``V`` is stable for ``g`` when each smaller neighborhood shape
    contains a clopen copy of ``V`` and ``V`` contains each of them.
    """
    witnesses = []
    ok = True
    for m in maximal_germs(e).germs:
        preds = immediate_predecessors(e, m)
        for g in [m] + ([] if isinstance(preds, LimitChain) else preds):
            form = stable_form(g)
            stable = all(
                clopen_embeds(form, n) and clopen_embeds(n, form) for n in neighborhood_forms(g, 2)
            )
            ok = ok and stable
            witnesses.append((g, form))
    return TameReport(ok, tuple(witnesses))
