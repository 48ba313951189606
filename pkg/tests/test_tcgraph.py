import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigmcg.corpus import CANTOR_TREE, EDGE_CASES, FLUTE, LADDER, TRANSLATABLE
from bigmcg.exprs import PLANAR, Pt, Sum
from bigmcg.grammar import ParseError
from bigmcg.tcgraph import (
    BUDGET_EXCEEDED,
    CurveError,
    CurveSpec,
    Move,
    NotNested,
    RegionData,
    Side,
    adjacent,
    ball,
    bfs_distance,
    connect_path,
    curve_canonical,
    graph_for,
    nested,
    parse_curve,
    region,
    shift,
)
from oracles import flute_distance
from strategies import curves, flute_minus_sets, pieces_of

MINUS, PLUS = Side.MINUS, Side.PLUS
flute, ladder = pieces_of(FLUTE), pieces_of(LADDER)
punctured_ladder = pieces_of(TRANSLATABLE[6])
cantor_two = pieces_of(TRANSLATABLE[9])
tree = pieces_of(CANTOR_TREE)
SURFACES = [flute, ladder, punctured_ladder, cantor_two, tree]
SURFACE_IDS = ["flute", "ladder", "punctured", "cantor", "tree"]


def cut(k, *moves, dg=0):
    return CurveSpec(k, tuple(Move(*m) for m in moves), dg)


def test_canonical_examples():
    assert curve_canonical(cut(2), flute) == cut(2)
    assert curve_canonical(cut(1, (1, "p0", MINUS)), flute) == cut(2)
    assert curve_canonical(cut(0, dg=2), ladder) == cut(2)


def test_redundant_and_trivial_moves_are_errors():
    with pytest.raises(CurveError):
        curve_canonical(cut(0, (1, "p0", MINUS), (1, "p0", MINUS)), flute)
    with pytest.raises(CurveError):
        curve_canonical(cut(0, (1, "p0", PLUS)), flute)
    with pytest.raises(CurveError):
        curve_canonical(cut(0, (1, "p7", MINUS)), flute)
    with pytest.raises(CurveError):
        curve_canonical(cut(0, (1, "p0", MINUS, "01")), flute)
    with pytest.raises(CurveError):
        curve_canonical(cut(0, dg=1), flute)


def test_nested_examples():
    assert nested(cut(0), cut(2), flute)
    assert nested(cut(0, (0, "p0", MINUS)), cut(1), flute)
    assert nested(cut(0, (-1, "p0", PLUS)), cut(1), flute)
    assert nested(cut(1), cut(1, (1, "p0", MINUS)), flute)
    assert not nested(cut(0, (0, "p0", MINUS)), cut(0, (1, "p0", MINUS)), flute)


def test_region_examples():
    assert region(cut(0), cut(2), flute) == RegionData(Sum((Pt(PLANAR), Pt(PLANAR))), 0)
    assert region(cut(0), cut(1), ladder) == RegionData(None, 1)
    assert region(cut(3), cut(3), flute) == RegionData(None, 0)
    with pytest.raises(NotNested):
        region(cut(2), cut(0), flute)


def test_adjacency_examples():
    assert adjacent(cut(0), cut(1), ladder)
    assert not adjacent(cut(0), cut(2), flute)
    assert adjacent(cut(0), cut(1), flute)
    assert not adjacent(cut(1), cut(1), flute)


def test_connect_path_examples():
    assert connect_path(cut(0), cut(3), flute) == [cut(0), cut(1), cut(2), cut(3)]
    assert connect_path(cut(4), cut(4), flute) == [cut(4)]
    assert len(connect_path(cut(0), cut(0, dg=2), ladder)) == 3


def test_distance_examples():
    assert bfs_distance(cut(0), cut(5), flute, 8) == 5
    assert bfs_distance(cut(1), cut(1), flute, 1) == 0
    for n in range(1, 21):
        assert bfs_distance(cut(0), cut(n), ladder, 25) == n


def test_tiny_budget_can_be_exceeded():
    assert bfs_distance(cut(0), cut(6), flute, 1, max_vertices=10) == BUDGET_EXCEEDED
    with pytest.raises(ValueError):
        bfs_distance(cut(0), cut(1), flute, 0)


def test_shift_examples():
    assert shift(cut(0), 3) == cut(3)
    c = cut(0, (1, "p0", MINUS))
    assert shift(shift(c, 2), -5) == shift(c, -3)
    assert shift(c, 0) == c


def test_ball_on_ladder_is_a_path():
    b = ball(cut(0), 3, ladder, 3)
    assert sorted(d for _, d in b.vertices) == [0, 1, 1, 2, 2, 3, 3]
    assert not b.budget_exceeded
    assert len(b.edges) == 6


def test_ball_exports():
    b = ball(cut(0), 1, flute, 1)
    data = b.to_json()
    assert data["vertices"][0] == {"id": 0, "curve": str(cut(0)), "distance": 0}
    assert data["budgetExceeded"] is True
    dot = b.to_dot()
    assert dot.startswith("graph TC {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == len(b.edges)


def test_curve_literals():
    c = parse_curve("curve(cut=-1; moves=[(0, p1:01, minus), (2, p0, -)]; dg=3)")
    assert c == cut(-1, (0, "p1", MINUS, "01"), (2, "p0", MINUS), dg=3)
    assert parse_curve("curve(cut=4)") == cut(4)
    for bad in ["curve(cut=)", "curve(cut=1; moves=[(0, p0, ?)])", "curve(cut=1; pieces=[])", "curve(cut=1) x"]:
        with pytest.raises(ParseError):
            parse_curve(bad)


@pytest.mark.parametrize("cp", SURFACES, ids=SURFACE_IDS)
def test_frame_neighbors_match_adjacency(cp):
    g = graph_for(cp)
    frame = g.frame(0, 1, 1)
    hs = range(0, 3) if g.g else [0]
    states = [(m, h) for m in range(frame.full + 1) for h in hs]
    splits = {s: frame.decode(s) for s in states}
    for s in states:
        fast = {n for n in frame.neighbors(s, min(hs), max(hs))}
        slow = {t for t in states if g.adjacent_splits(splits[s], splits[t])}
        assert fast == slow


def minus_curve(cut_, flips):
    return cut(cut_, *sorted((i, "p0", PLUS if i < cut_ else MINUS) for i in flips))


@given(flute_minus_sets(), flute_minus_sets())
def test_flute_distance_is_symmetric_difference(a, b):
    (ma, ka, fa), (mb, kb, fb) = a, b
    assert bfs_distance(minus_curve(ka, fa), minus_curve(kb, fb), flute, 2) == flute_distance(ma, mb)


@given(flute_minus_sets(), flute_minus_sets())
def test_flute_adjacency_is_one_puncture(a, b):
    (ma, ka, fa), (mb, kb, fb) = a, b
    assert adjacent(minus_curve(ka, fa), minus_curve(kb, fb), flute) == (flute_distance(ma, mb) == 1)


@pytest.mark.parametrize("cp", SURFACES, ids=SURFACE_IDS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_canonical_form_properties(cp, data):
    c = data.draw(curves(cp))
    n = data.draw(st.integers(-4, 4))
    assert curve_canonical(c, cp) == c
    assert curve_canonical(shift(c, n), cp) == shift(c, n)
    assert parse_curve(str(c)) == c


# Cantor pieces make every vertex have exponentially many neighbours in the
# frame width, so those surfaces get narrow supports.
SEARCH_CASES = [(flute, -1, 1, 2), (ladder, -1, 1, 2), (punctured_ladder, -1, 1, 2), (cantor_two, 0, 0, 1)]


@pytest.mark.parametrize("cp,lo,hi,budget", SEARCH_CASES, ids=["flute", "ladder", "punctured", "cantor"])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_paths_are_valid_and_bound_the_distance(cp, lo, hi, budget, data):
    a, b = data.draw(curves(cp, lo, hi)), data.draw(curves(cp, lo, hi))
    path = connect_path(a, b, cp)
    assert path[0] == a and path[-1] == b
    assert all(adjacent(x, y, cp) for x, y in zip(path, path[1:]))
    d = bfs_distance(a, b, cp, budget)
    assert d != BUDGET_EXCEEDED and d <= len(path) - 1


@pytest.mark.parametrize("cp", [flute, punctured_ladder], ids=["flute", "punctured"])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_distance_is_shift_invariant(cp, data):
    a, b = data.draw(curves(cp, -1, 1)), data.draw(curves(cp, -1, 1))
    n = data.draw(st.integers(-5, 5))
    assert bfs_distance(shift(a, n), shift(b, n), cp, 2) == bfs_distance(a, b, cp, 2)
    assert adjacent(shift(a, n), shift(b, n), cp) == adjacent(a, b, cp)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_punctured_ladder_distance_is_l1(data):
    a, b = data.draw(curves(punctured_ladder, -1, 1)), data.draw(curves(punctured_ladder, -1, 1))
    g = graph_for(punctured_ladder)
    x, y = g.split(a), g.split(b)
    frame = g.frame(-3, 3, 0)
    (ma, ha), (mb, hb) = frame.encode(x), frame.encode(y)
    assert bfs_distance(a, b, punctured_ladder, 2) == bin(ma ^ mb).count("1") + abs(ha - hb)


@pytest.mark.parametrize("text", EDGE_CASES)
@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_edge_case_diameter_two(text, data):
    cp = pieces_of(text)
    assert cp.edge_case_diameter2
    a, b = data.draw(curves(cp, -1, 1)), data.draw(curves(cp, -1, 1))
    assert bfs_distance(a, b, cp, 1) <= 2
    path = connect_path(a, b, cp)
    assert all(adjacent(x, y, cp) for x, y in zip(path, path[1:]))


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_distance_does_not_grow_with_budget(data):
    a, b = data.draw(curves(punctured_ladder, -1, 0)), data.draw(curves(punctured_ladder, -1, 0))
    wide = bfs_distance(a, b, punctured_ladder, 3)
    assert wide != BUDGET_EXCEEDED and bfs_distance(a, b, punctured_ladder, 1) >= wide
