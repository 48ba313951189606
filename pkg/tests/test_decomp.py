import pytest
from hypothesis import given

from bigmcg.classifier import classify
from bigmcg.corpus import EDGE_CASES, FLUTE, LADDER, TRANSLATABLE, load
from bigmcg.decomp import NotTranslatable, build_segment, canonical_pieces, piece_summary, reassemble, segment_for
from bigmcg.endspace import canonicalize, is_homeomorphic
from bigmcg.exprs import GENUS, INF, PLANAR, Cantor, Ord, Pt, SegmentSpec, disjoint_union, has_genus
from bigmcg.germs import germ_leq
from bigmcg.preorder import immediate_predecessors, maximal_germs
from oracles import order_type
from strategies import segments


def test_flute_segment():
    assert build_segment(load(FLUTE)) == SegmentSpec(0, Pt(PLANAR))


def test_ladder_segment():
    assert build_segment(load(LADDER)) == SegmentSpec(1, None)


def test_limit_type_has_no_segment():
    with pytest.raises(NotTranslatable):
        build_segment(load("surface(genus=0, ends=ord(w,2))"))
    with pytest.raises(NotTranslatable):
        build_segment(load("surface(genus=0, ends=cantor + pt)"))


def test_reassemble_examples():
    flute = reassemble(SegmentSpec(0, Pt(PLANAR)))
    assert flute == load(FLUTE)
    # two copies of a convergent sequence with its limit
    assert order_type(flute.ends) == order_type(Ord(1, 2))
    assert reassemble(SegmentSpec(1, None)) == load(LADDER)


def test_piece_examples():
    assert canonical_pieces(SegmentSpec(1, None)).pieces == (SegmentSpec(1, None),)
    assert canonical_pieces(SegmentSpec(0, Pt(PLANAR))).pieces == (SegmentSpec(0, Pt(PLANAR)),)
    cp = canonical_pieces(SegmentSpec(0, Cantor(PLANAR)))
    assert cp.edge_case_diameter2 and cp.pieces == (cp.segment,)
    assert not canonical_pieces(SegmentSpec(1, None)).edge_case_diameter2


def test_piece_summary_fields():
    summary = piece_summary(canonical_pieces(build_segment(load(LADDER))))
    assert summary == {
        "segment": "segment(genus=1, ends=empty)",
        "pieces": ["segment(genus=1, ends=empty)"],
        "edgeCaseDiameter2": False,
        "segmentGenus": "1",
    }


def test_handle_piece_only_for_finite_positive_genus():
    assert canonical_pieces(build_segment(load(LADDER))).has_handle_piece
    assert not canonical_pieces(build_segment(load(FLUTE))).has_handle_piece
    mixed = canonical_pieces(SegmentSpec(1, Pt(PLANAR)))
    assert mixed.pieces == (SegmentSpec(0, Pt(PLANAR)), SegmentSpec(1, None))


@pytest.mark.parametrize("text", TRANSLATABLE + EDGE_CASES[1:])
def test_reassembly_roundtrip(text):
    s = load(text)
    if text in EDGE_CASES:
        seg = segment_for(s, maximal_germs(s.ends).germs[0])
    else:
        seg = build_segment(s)
    back = reassemble(seg)
    assert back.genus == s.genus
    assert is_homeomorphic(back.ends, s.ends)


@pytest.mark.parametrize("text", TRANSLATABLE)
def test_segment_ends_are_predecessor_forms(text):
    s = load(text)
    seg = build_segment(s)
    if seg.ends is None:
        return
    (top,) = maximal_germs(s.ends).germs
    preds = immediate_predecessors(s.ends, top)
    for g in maximal_germs(seg.ends).germs:
        assert any(germ_leq(g, p) and germ_leq(p, g) for p in preds)


@given(segments())
def test_random_segments_roundtrip(seg):
    s = reassemble(seg)
    assert classify(s).translatable
    back = reassemble(build_segment(s))
    assert back.genus == s.genus and is_homeomorphic(back.ends, s.ends)


@given(segments())
def test_pieces_are_built_from_maximal_forms(seg):
    cp = canonical_pieces(seg)
    top = list(cp.finite_classes) + list(cp.cantor_classes)
    for piece in cp:
        assert piece.genus >= 1 or piece.ends is not None
        if cp.edge_case_diameter2 or piece.ends is None:
            continue
        used = [g for g in top if any(germ_leq(g, h) and germ_leq(h, g) for h in maximal_germs(piece.ends).germs)]
        assert canonicalize(disjoint_union([g.stable_form for g in used])) == piece.ends


@given(segments())
def test_piece_genus_rule(seg):
    cp = canonical_pieces(seg)
    if cp.edge_case_diameter2:
        return
    for piece in cp.pieces[: len(cp.finite_classes)]:
        assert (piece.genus == INF) == has_genus(piece.ends)
    assert cp.has_handle_piece == (seg.genus not in (0, INF))
    if cp.has_handle_piece:
        assert cp.pieces[-1].genus == 1


def test_genus_marked_piece():
    cp = canonical_pieces(SegmentSpec(INF, disjoint_union([Pt(GENUS), Cantor(PLANAR)])))
    assert cp.pieces == (SegmentSpec(INF, disjoint_union([Pt(GENUS), Cantor(PLANAR)])),)
