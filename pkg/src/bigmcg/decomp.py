"""Segments of translatable surfaces and the canonical piece set."""

from __future__ import annotations

from dataclasses import dataclass

from .endspace import canonicalize
from .exprs import (
    GENUS,
    INF,
    PLANAR,
    Omega,
    Pt,
    SegmentSpec,
    SurfaceSpec,
    disjoint_union,
    format_genus,
    has_genus,
)
from .germs import Germ, Many, stable_form
from .preorder import LimitChain, immediate_predecessors, maximal_germs


class NotTranslatable(ValueError):
    pass


@dataclass(frozen=True)
class CanonicalPieces:
    """The model pieces ``T_1..T_n`` (plus the genus piece when present).

    ``finite_classes`` and ``cantor_classes`` are the maximal germs of the
    segment's end space that the pieces are built from.
    """

    segment: SegmentSpec
    pieces: tuple[SegmentSpec, ...]
    finite_classes: tuple[Germ, ...]
    cantor_classes: tuple[Germ, ...]
    has_handle_piece: bool
    edge_case_diameter2: bool

    def __iter__(self):
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)


def segment_for(s: SurfaceSpec, top: Germ) -> SegmentSpec:
    """Segment whose bi-infinite chain recovers ``s``, seen from maximal germ ``top``."""
    preds = immediate_predecessors(s.ends, top)
    if isinstance(preds, LimitChain):
        raise NotTranslatable(f"no immediate predecessors below {top}: {preds}")
    forms = [stable_form(g) for g in preds]
    if top.is_cantor:
        forms.append(stable_form(top))
    ends = disjoint_union(sorted(forms, key=lambda f: f.sort_key()))
    if ends is not None:
        ends = canonicalize(ends)
    if ends is not None and has_genus(ends):
        genus = INF
    else:
        genus = 0 if s.genus == 0 else 1
    return SegmentSpec(genus, ends)


def build_segment(s: SurfaceSpec) -> SegmentSpec:
    from .classifier import classify

    verdict = classify(s)
    if not verdict.translatable:
        raise NotTranslatable(f"{s} classifies as {verdict.label}")
    top = maximal_germs(s.ends).germs[0]
    return segment_for(s, top)


def reassemble(seg: SegmentSpec) -> SurfaceSpec:
    """The surface obtained by gluing copies of ``seg`` end to end along Z."""
    marked = seg.genus >= 1 or (seg.ends is not None and has_genus(seg.ends))
    apex = GENUS if marked else PLANAR
    side = Pt(apex) if seg.ends is None else Omega(seg.ends, apex)
    ends = canonicalize(disjoint_union([side, side]))
    return SurfaceSpec(INF if seg.genus >= 1 else 0, ends)


def canonical_pieces(seg: SegmentSpec, s: SurfaceSpec | None = None) -> CanonicalPieces:
    if s is not None and s.genus != INF and s.genus > 0:
        raise NotTranslatable("finite positive genus")
    entries = list(maximal_germs(seg.ends)) if seg.ends is not None else []
    finite = tuple(g for g, n in entries if n is not Many.CANTOR)
    cantor = tuple(g for g, n in entries if n is Many.CANTOR)
    cantor_forms = [stable_form(c) for c in cantor]
    handle = seg.genus not in (0, INF)
    if not finite and not handle:
        return CanonicalPieces(seg, (seg,), finite, cantor, False, True)
    pieces = []
    for f in finite:
        marked = f.marking is GENUS or any(c.marking is GENUS for c in cantor)
        ends = canonicalize(disjoint_union([stable_form(f)] + cantor_forms))
        pieces.append(SegmentSpec(INF if marked else 0, ends))
    if handle:
        ends = disjoint_union(cantor_forms)
        pieces.append(SegmentSpec(1, None if ends is None else canonicalize(ends)))
    return CanonicalPieces(seg, tuple(pieces), finite, cantor, handle, False)


def describe_pieces(cp: CanonicalPieces) -> list[str]:
    return [str(p) for p in cp.pieces]


def piece_summary(cp: CanonicalPieces) -> dict:
    return {
        "segment": str(cp.segment),
        "pieces": describe_pieces(cp),
        "edgeCaseDiameter2": cp.edge_case_diameter2,
        "segmentGenus": format_genus(cp.segment.genus),
    }

