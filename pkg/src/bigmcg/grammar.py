"""Parser for the surface-description language.

::

    endexpr := term ("+" term)*
    term    := pt | ptG | cantor | cantorG | ord(ordinal, int)
             | omega(endexpr) | omegaG(endexpr)
    surface := surface(genus=(inf|int), ends=endexpr)
    segment := segment(genus=(inf|int), ends=(endexpr|empty))

Whitespace is insignificant.  ``str()`` of any parsed object prints this
grammar back.
"""

from __future__ import annotations

from typing import Union

from .exprs import (
    GENUS,
    INF,
    PLANAR,
    Cantor,
    EndExpr,
    ExprError,
    Genus,
    Omega,
    Ord,
    Pt,
    SegmentSpec,
    Sum,
    SurfaceSpec,
)
from .ordinals import Ordinal, OrdinalError, _OrdinalParser


class ParseError(ExprError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Scanner:
    """Character cursor shared by the expression and curve parsers."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            found = self.text[self.pos:self.pos + 10] or "end of input"
            raise self.error(f"expected {literal!r}, found {found!r}")
        self.pos += len(literal)

    def accept(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        if start == self.pos:
            found = self.text[start:start + 10] or "end of input"
            raise self.error(f"expected a name, found {found!r}")
        return self.text[start:self.pos]

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits.lstrip("+-"):
            self.pos = start
            raise self.error("expected an integer")
        return int(digits)

    def ordinal(self) -> Ordinal:
        self.skip_ws()
        sub = _OrdinalParser(self.text, self.pos)
        try:
            value = sub.sum()
        except OrdinalError as err:
            raise ParseError(f"bad ordinal ({err})", sub.pos) from None
        self.pos = sub.pos
        return value

    def genus(self) -> Genus:
        if self.peek() == "i":
            self.expect("inf")
            return INF
        return self.integer()


_ATOMS = {"pt": Pt(PLANAR), "ptG": Pt(GENUS), "cantor": Cantor(PLANAR), "cantorG": Cantor(GENUS)}


def _endexpr(sc: Scanner) -> EndExpr:
    terms = [_term(sc)]
    while sc.accept("+"):
        terms.append(_term(sc))
    return terms[0] if len(terms) == 1 else Sum(tuple(terms))


def _term(sc: Scanner) -> EndExpr:
    start = sc.pos
    name = sc.word()
    if name in _ATOMS:
        return _ATOMS[name]
    try:
        if name == "ord":
            sc.expect("(")
            alpha = sc.ordinal()
            sc.expect(",")
            copies = sc.integer()
            sc.expect(")")
            return Ord(alpha, copies)
        if name in ("omega", "omegaG"):
            sc.expect("(")
            child = _endexpr(sc)
            sc.expect(")")
            return Omega(child, GENUS if name == "omegaG" else PLANAR)
    except ParseError:
        raise
    except ExprError as err:
        raise type(err)(f"{err} (term at position {start})") from None
    sc.pos = start
    raise sc.error(f"unknown term {name!r}")


def _header(sc: Scanner, keyword: str) -> Genus:
    sc.expect(keyword)
    sc.expect("(")
    sc.expect("genus")
    sc.expect("=")
    genus = sc.genus()
    sc.expect(",")
    sc.expect("ends")
    sc.expect("=")
    return genus


def _finish(sc: Scanner) -> None:
    if not sc.at_end():
        raise sc.error(f"unexpected trailing text {sc.text[sc.pos:sc.pos + 10]!r}")


def parse_endexpr(text: str) -> EndExpr:
    sc = Scanner(text)
    e = _endexpr(sc)
    _finish(sc)
    return e


def parse_surface(text: str) -> SurfaceSpec:
    sc = Scanner(text)
    genus = _header(sc, "surface")
    ends = _endexpr(sc)
    sc.expect(")")
    _finish(sc)
    return SurfaceSpec(genus, ends)


def parse_segment(text: str) -> SegmentSpec:
    sc = Scanner(text)
    genus = _header(sc, "segment")
    if sc.peek() == "e":
        sc.expect("empty")
        ends = None
    else:
        ends = _endexpr(sc)
    sc.expect(")")
    _finish(sc)
    return SegmentSpec(genus, ends)


def parse(text: str) -> Union[SurfaceSpec, SegmentSpec, EndExpr]:
    """Parse a surface, a segment, or a bare end expression."""
    head = text.lstrip()
    if head.startswith("surface"):
        return parse_surface(text)
    if head.startswith("segment"):
        return parse_segment(text)
    return parse_endexpr(text)
