"""Decide coarse boundedness, translatability, or the obstruction to a
curve-graph quasi-isometry model for a surface."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .endspace import canonical_surface, clopen_embeds, is_finite_type
from .exprs import GENUS, INF, EndExpr, ExprError, SurfaceSpec, format_genus
from .germs import Many
from .preorder import (
    GermSummary,
    LimitChain,
    immediate_predecessors,
    is_tame,
    maximal_germs,
    neighborhood_forms,
)


class InvalidSurface(ExprError):
    """Finite-type surfaces (or empty end spaces) are not classified."""


class Tag(str, enum.Enum):
    COARSELY_BOUNDED = "CoarselyBounded"
    TRANSLATABLE = "Translatable"
    NO_CURVE_GRAPH_QI = "NoCurveGraphQI"
    NOT_CB_GENERATED = "NotCBGenerated"
    NOT_LOCALLY_CB = "NotLocallyCB"
    OUTSIDE_FRAGMENT = "OutsideFragment"

    def __str__(self) -> str:
        return self.value


class Reason(str, enum.Enum):
    FINITE_POSITIVE_GENUS = "FinitePositiveGenus"
    THREE_TO_FINITELY_MANY_MAXIMAL = "ThreeToFinitelyManyMaximal"
    MAXIMAL_ENDS_NOT_ALL_EQUIVALENT = "MaximalEndsNotAllEquivalent"
    TWO_INEQUIVALENT_MAXIMAL = "TwoInequivalentMaximal"

    def __str__(self) -> str:
        return self.value


# Short keys for the results each branch rests on, with a one-line statement.
CITATIONS = {
    "trichotomy": "for tame surfaces with CB-generated groups: translatable, CB, or no curve graph is QI",
    "self_similar": "a self-similar end space (and finite or infinite genus) gives a CB mapping class group",
    "two_ends": "two equivalent maximal ends with stable predecessor data give a translatable surface",
    "genus_parity": "the two translated ends are both accumulated by genus or both not",
    "predecessors": "a translatable surface has finitely many immediate predecessor classes of its ends",
    "limit_type": "a cofinal chain of pairwise inequivalent ends blocks a CB generating set",
    "finite_genus": "finite positive genus gives a nondisplaceable finite-type subsurface",
    "finite_ends": "three to finitely many maximal ends give a nondisplaceable subsurface",
    "inf_ends": "infinitely many maximal ends, not all equivalent, give a nondisplaceable subsurface",
    "two_diff_ends": "two inequivalent maximal ends give a nondisplaceable subsurface",
    "edge_case": "when the segment has no finite maximal classes the curve graph has diameter 2",
}

_REASON_CITATION = {
    Reason.FINITE_POSITIVE_GENUS: "finite_genus",
    Reason.THREE_TO_FINITELY_MANY_MAXIMAL: "finite_ends",
    Reason.MAXIMAL_ENDS_NOT_ALL_EQUIVALENT: "inf_ends",
    Reason.TWO_INEQUIVALENT_MAXIMAL: "two_diff_ends",
}


@dataclass(frozen=True)
class Verdict:
    tag: Tag
    reason: Reason | None = None
    citations: tuple[str, ...] = ()
    evidence: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def label(self) -> str:
        return f"{self.tag}({self.reason})" if self.reason else str(self.tag)

    @property
    def translatable(self) -> bool:
        return self.tag is Tag.TRANSLATABLE or bool(self.evidence.get("translatable"))

    def to_json(self) -> dict[str, Any]:
        return {
            "tag": str(self.tag),
            "reason": None if self.reason is None else str(self.reason),
            "citations": [{"key": k, "statement": CITATIONS[k]} for k in self.citations],
            "evidence": self.evidence,
        }


def _summary_json(ms: GermSummary) -> list[dict[str, str]]:
    return [{"germ": str(g), "count": str(n)} for g, n in ms]


def _preds_json(e: EndExpr, ms: GermSummary) -> list[dict[str, Any]]:
    out = []
    for g in ms.germs:
        preds = immediate_predecessors(e, g)
        if isinstance(preds, LimitChain):
            out.append({"germ": str(g), "limitChain": [str(r) for r in preds.ranks]})
        else:
            out.append({"germ": str(g), "predecessors": [str(p) for p in preds]})
    return out


def detect_limit_type(s: SurfaceSpec) -> LimitChain | None:
    """A limit chain below a finite, invariant class of maximal ends, if any."""
    for g, n in maximal_germs(s.ends):
        if n is Many.CANTOR:
            continue
        preds = immediate_predecessors(s.ends, g)
        if isinstance(preds, LimitChain):
            return preds
    return None


def is_self_similar_fragment(e: EndExpr) -> bool:
    ms = maximal_germs(e)
    if len(ms) != 1:
        return False
    (g, n), = ms.entries
    if n not in (1, Many.CANTOR):
        return False
    return all(clopen_embeds(e, nbhd) for nbhd in neighborhood_forms(g, 3))


def _no_qi(reason: Reason, evidence: dict[str, Any]) -> Verdict:
    return Verdict(Tag.NO_CURVE_GRAPH_QI, reason, ("trichotomy", _REASON_CITATION[reason]), evidence)


def classify(s: SurfaceSpec) -> Verdict:
    from .decomp import NotTranslatable, canonical_pieces, segment_for

    if is_finite_type(s):
        raise InvalidSurface(f"{s} has finite type")
    s = canonical_surface(s)
    e = s.ends
    ms = maximal_germs(e)
    evidence: dict[str, Any] = {
        "genus": format_genus(s.genus),
        "maximal": _summary_json(ms),
        "translatable": False,
    }

    tame = is_tame(e)
    if not tame:
        bad = [str(g) for g, _ in tame.witnesses]
        return Verdict(Tag.OUTSIDE_FRAGMENT, None, (), {**evidence, "untamed": bad})

    if s.genus != INF and s.genus > 0:
        return _no_qi(Reason.FINITE_POSITIVE_GENUS, evidence)

    evidence["predecessors"] = _preds_json(e, ms)
    counts = [n for _, n in ms]

    if len(ms) == 1 and counts[0] in (1, Many.CANTOR):
        if not is_self_similar_fragment(e):
            return Verdict(Tag.OUTSIDE_FRAGMENT, None, (), {**evidence, "selfSimilar": False})
        evidence["selfSimilar"] = True
        if counts[0] is Many.CANTOR:
            # A Cantor class is itself a chain of segments between any two of its points.
            seg = segment_for(s, ms.germs[0])
            evidence["translatable"] = True
            evidence["segment"] = str(seg)
            evidence["edgeCaseDiameter2"] = canonical_pieces(seg, s).edge_case_diameter2
        return Verdict(Tag.COARSELY_BOUNDED, None, ("self_similar",), evidence)

    chain = detect_limit_type(s)
    if chain is not None:
        evidence["limitChain"] = [str(r) for r in chain.ranks]
        return Verdict(Tag.NOT_CB_GENERATED, None, ("predecessors", "limit_type"), evidence)

    if len(ms) == 1 and counts[0] == 2:
        (g,) = ms.germs
        # Both maximal ends have the same germ, hence the same marking.
        evidence["genusParity"] = "genus" if g.marking is GENUS else "planar"
        try:
            seg = segment_for(s, g)
        except NotTranslatable as err:
            return Verdict(Tag.NOT_CB_GENERATED, None, ("predecessors",), {**evidence, "detail": str(err)})
        pieces = canonical_pieces(seg, s)
        evidence["translatable"] = True
        evidence["segment"] = str(seg)
        evidence["edgeCaseDiameter2"] = pieces.edge_case_diameter2
        if pieces.edge_case_diameter2:
            return Verdict(Tag.COARSELY_BOUNDED, None, ("self_similar", "edge_case"), evidence)
        return Verdict(Tag.TRANSLATABLE, None, ("trichotomy", "two_ends", "genus_parity"), evidence)

    if Many.CANTOR in counts:
        return _no_qi(Reason.MAXIMAL_ENDS_NOT_ALL_EQUIVALENT, evidence)
    if len(ms) == 2 and counts == [1, 1]:
        return _no_qi(Reason.TWO_INEQUIVALENT_MAXIMAL, evidence)
    return _no_qi(Reason.THREE_TO_FINITELY_MANY_MAXIMAL, evidence)
