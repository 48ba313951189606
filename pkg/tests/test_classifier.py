import pytest
from hypothesis import given

from bigmcg import classifier
from bigmcg.classifier import InvalidSurface, Reason, Tag, classify, detect_limit_type, is_self_similar_fragment
from bigmcg.corpus import EDGE_CASES, TRANSLATABLE, VERDICT_TABLE, load
from bigmcg.endspace import canonical_surface
from bigmcg.exprs import PLANAR, Cantor, MarkingError, Ord, Pt, SurfaceSpec
from bigmcg.preorder import TameReport, maximal_germs
from strategies import surfaces

OBSTRUCTION_KEYS = {"finite_genus", "finite_ends", "inf_ends", "two_diff_ends"}


@pytest.mark.parametrize("text,label", VERDICT_TABLE)
def test_verdict_table(text, label):
    assert classify(load(text)).label == label


def test_more_verdicts():
    assert classify(load("surface(genus=0, ends=ord(1,1) + ord(2,1))")).tag is Tag.COARSELY_BOUNDED
    v = classify(load("surface(genus=0, ends=ord(1,1) + ord(2,1) + ord(2,1))"))
    assert v.tag is Tag.TRANSLATABLE
    v = classify(load("surface(genus=inf, ends=ptG + pt)"))
    assert v.label == "NoCurveGraphQI(TwoInequivalentMaximal)"
    v = classify(load("surface(genus=0, ends=ord(w,3))"))
    assert v.tag is Tag.NOT_CB_GENERATED
    assert v.evidence["limitChain"][:3] == ["1", "2", "3"]


def test_finite_type_is_rejected():
    with pytest.raises(InvalidSurface):
        classify(load("surface(genus=2, ends=pt + pt + pt)"))


def test_untamed_surface_falls_outside(monkeypatch):
    monkeypatch.setattr(classifier, "is_tame", lambda e: TameReport(False, ((Pt(PLANAR), None),)))
    v = classify(load(VERDICT_TABLE[0][0]))
    assert v.tag is Tag.OUTSIDE_FRAGMENT
    assert v.evidence["untamed"]


def test_self_similarity_examples():
    assert is_self_similar_fragment(Cantor(PLANAR))
    assert not is_self_similar_fragment(Ord(1, 2))
    assert is_self_similar_fragment(Pt(PLANAR))


def test_limit_type_only_below_limit_ranks():
    assert detect_limit_type(load("surface(genus=0, ends=ord(w,2))")) is not None
    assert detect_limit_type(load("surface(genus=0, ends=ord(w+1,2))")) is None


@pytest.mark.parametrize("text", EDGE_CASES)
def test_edge_case_is_bounded_but_translatable(text):
    v = classify(load(text))
    assert v.tag is Tag.COARSELY_BOUNDED
    assert v.translatable and v.evidence["edgeCaseDiameter2"]


def test_many_maximal_ends_translatable_yet_bounded():
    v = classify(load("surface(genus=0, ends=cantor)"))
    assert str(maximal_germs(Cantor(PLANAR)).entries[0][1]) == "cantor-many"
    assert v.tag is Tag.COARSELY_BOUNDED and v.evidence["translatable"] is True


@pytest.mark.parametrize("text", TRANSLATABLE)
def test_corpus_is_translatable(text):
    assert classify(load(text)).tag is Tag.TRANSLATABLE


def test_json_report_shape():
    data = classify(load(VERDICT_TABLE[5][0])).to_json()
    assert data["tag"] == "NoCurveGraphQI"
    assert data["reason"] == "FinitePositiveGenus"
    assert {c["key"] for c in data["citations"]} == {"trichotomy", "finite_genus"}


@given(surfaces())
def test_verdict_depends_only_on_canonical_form(s):
    assert classify(s) == classify(canonical_surface(s))


@given(surfaces())
def test_translatable_evidence(s):
    v = classify(s)
    if v.tag is not Tag.TRANSLATABLE:
        return
    ev = v.evidence
    assert len(ev["maximal"]) == 1 and ev["maximal"][0]["count"] == "2"
    assert ev["genus"] in ("0", "inf")
    assert "limitChain" not in ev
    assert ev["genusParity"] == ("genus" if ev["genus"] == "inf" and "G" in ev["maximal"][0]["germ"] else "planar")
    assert v.translatable


@given(surfaces())
def test_obstructions_cite_one_reason(s):
    v = classify(s)
    if v.tag is Tag.NO_CURVE_GRAPH_QI:
        assert isinstance(v.reason, Reason)
        assert len(OBSTRUCTION_KEYS & set(v.citations)) == 1
    else:
        assert v.reason is None


@given(surfaces())
def test_bounded_and_translatable_only_in_edge_case(s):
    v = classify(s)
    if v.tag is Tag.COARSELY_BOUNDED and v.translatable:
        assert v.evidence["edgeCaseDiameter2"] or v.evidence["maximal"][0]["count"] == "cantor-many"


def test_finite_genus_with_genus_ends_is_not_a_surface():
    with pytest.raises(MarkingError):
        SurfaceSpec(2, load(VERDICT_TABLE[0][0]).ends)
