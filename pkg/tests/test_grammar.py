import pytest
from hypothesis import given

from bigmcg.exprs import GENUS, INF, PLANAR, Cantor, ExprError, MarkingError, Omega, Ord, Pt, SegmentSpec, Sum, SurfaceSpec
from bigmcg.endspace import canonicalize
from bigmcg.grammar import ParseError, parse, parse_endexpr
from bigmcg.ordinals import OMEGA
from strategies import end_exprs


def test_sum_of_points():
    assert parse("pt + pt") == Sum((Pt(PLANAR), Pt(PLANAR)))


def test_ladder_surface():
    assert parse("surface(genus=inf, ends=ptG + ptG)") == SurfaceSpec(INF, Sum((Pt(GENUS), Pt(GENUS))))


def test_terms():
    assert parse("ord(w, 2)") == Ord(OMEGA, 2)
    assert parse("omegaG( ptG )") == Omega(Pt(GENUS), GENUS)
    assert parse("cantorG") == Cantor(GENUS)
    assert parse("segment(genus=1, ends=empty)") == SegmentSpec(1, None)


def test_marking_inconsistency():
    with pytest.raises(MarkingError):
        parse("surface(genus=0, ends=ptG)")
    with pytest.raises(MarkingError):
        parse("surface(genus=inf, ends=pt)")
    with pytest.raises(MarkingError):
        parse("omega(ptG)")


def test_syntax_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse("surface(genus=0, ends=)")
    assert info.value.position == 22
    for text in ["", "pt +", "ord(w,", "foo", "pt pt", "surface(genus=-1, ends=pt)"]:
        with pytest.raises(ExprError):
            parse(text)


def test_ord_needs_positive_rank_and_copies():
    with pytest.raises(ExprError):
        parse("ord(0,1)")
    with pytest.raises(ExprError):
        parse("ord(1,0)")


def flatten(e):
    if isinstance(e, Omega):
        return Omega(flatten(e.child), e.apex)
    if isinstance(e, Sum):
        parts = []
        for c in map(flatten, e.children):
            parts.extend(c.children if isinstance(c, Sum) else [c])
        return Sum(tuple(parts))
    return e


@given(end_exprs(4))
def test_print_then_parse_is_identity_up_to_flattening(e):
    assert parse_endexpr(str(e)) == flatten(e)


@given(end_exprs(4))
def test_canonical_print_reparses_to_itself(e):
    c = canonicalize(e)
    assert parse_endexpr(str(c)) == c
