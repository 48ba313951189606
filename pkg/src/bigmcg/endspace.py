"""End-space calculus: canonical forms, homeomorphism and clopen embedding.

Canonical forms list one stable neighborhood per maximal end (merged into a
single ``ord`` atom for countable ranks, and a single ``cantor`` atom per Cantor
class), sorted by the fixed total order on expressions.  Two expressions denote
homeomorphic marked spaces exactly when their canonical forms coincide.
"""

from __future__ import annotations

from functools import lru_cache

from .exprs import (
    INF,
    Cantor,
    EndExpr,
    Omega,
    Ord,
    Pt,
    SegmentSpec,
    Sum,
    SurfaceSpec,
)
from .germs import GermKind, Many, germ_leq, render, summary
from .ordinals import ZERO, Ordinal

NOT_COUNTABLE = "NOT_COUNTABLE"


@lru_cache(maxsize=None)
def canonicalize(e: EndExpr) -> EndExpr:
    return render(summary(e))


def canonical_surface(s: SurfaceSpec) -> SurfaceSpec:
    return SurfaceSpec(s.genus, canonicalize(s.ends))


def canonical_segment(seg: SegmentSpec) -> SegmentSpec:
    ends = None if seg.ends is None else canonicalize(seg.ends)
    return SegmentSpec(seg.genus, ends)


def is_homeomorphic(a: EndExpr | None, b: EndExpr | None) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return canonicalize(a) == canonicalize(b)


@lru_cache(maxsize=None)
def clopen_embeds(a: EndExpr, b: EndExpr) -> bool:
    """Is ``a`` homeomorphic to a clopen subset of ``b``?

    Each maximal end type of ``a`` must occur in ``b``; if it is maximal in
    ``b`` with finitely many representatives, ``b`` must have at least as many.
    Types strictly below a maximal end of ``b`` occur infinitely often.
    """
    target = dict(summary(b))
    for g, n in summary(a):
        if g in target:
            have = target[g]
            if isinstance(have, int) and (not isinstance(n, int) or n > have):
                return False
        elif not any(germ_leq(g, h) for h in target):
            return False
    return True


@lru_cache(maxsize=None)
def cb_rank(e: EndExpr) -> tuple[Ordinal, int] | str:
    """Cantor-Bendixson rank and degree, read off the syntax tree directly.

    The rank is that of the top points (an isolated end has rank 0); markings
    are ignored.  Any Cantor atom makes the space uncountable.
    """
    if isinstance(e, Cantor):
        return NOT_COUNTABLE
    if isinstance(e, Pt):
        return (ZERO, 1)
    if isinstance(e, Ord):
        return (e.alpha, e.copies)
    if isinstance(e, Omega):
        inner = cb_rank(e.child)
        if inner == NOT_COUNTABLE:
            return NOT_COUNTABLE
        return (inner[0] + 1, 1)
    parts = [cb_rank(c) for c in e.children]
    if NOT_COUNTABLE in parts:
        return NOT_COUNTABLE
    top = max((r for r, _ in parts), key=Ordinal.sort_key)
    return (top, sum(d for r, d in parts if r == top))


def is_finite_set(e: EndExpr) -> bool:
    """True when ``e`` is finitely many isolated planar ends."""
    return all(
        g.kind is GermKind.COUNTABLE_RANK and g.rank == ZERO and isinstance(n, int)
        and not g.marking
        for g, n in summary(e)
    )


def is_finite_type(s: SurfaceSpec) -> bool:
    return s.genus != INF and is_finite_set(s.ends)
