"""The translatable curve graph in a piece-aligned model.

A translatable surface is a bi-infinite chain of copies of its segment ``S``,
indexed by the integers.  A vertex is a splitting of the chain into a minus
side (containing the ends toward ``e_-``) and a plus side: every segment far
enough to the left lies on the minus side, every segment far enough to the
right on the plus side, and finitely many stable pieces (or dyadic portions of
Cantor pieces) and handles are exchanged in between.

Handles are not tied to segments: a splitting only records ``H``, the number of
handles on the minus side, normalised so that the plain cut at ``K`` has
``H = g*K`` for segment genus ``g``.

Two splittings are adjacent when they nest and the region between them is
homeomorphic to one of the canonical pieces.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from .decomp import CanonicalPieces
from .endspace import canonicalize, is_homeomorphic
from .exprs import INF, EndExpr, Genus, disjoint_union, format_genus, has_genus
from .germs import Germ, stable_form
from .grammar import ParseError, Scanner
from .preorder import stable_partition

BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
DEFAULT_MAX_VERTICES = 500_000


class CurveError(ValueError):
    """A curve literal is malformed for the surface (redundant or unknown moves)."""


class NotNested(ValueError):
    pass


class Side(enum.Enum):
    MINUS = "-"
    PLUS = "+"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Move:
    """Put piece ``piece`` of segment ``seg`` (or its dyadic part ``addr``) on ``side``."""

    seg: int
    piece: str
    side: Side
    addr: str | None = None

    def __str__(self) -> str:
        target = self.piece if self.addr is None else f"{self.piece}:{self.addr}"
        return f"({self.seg}, {target}, {self.side})"


@dataclass(frozen=True)
class CurveSpec:
    cut: int
    moves: tuple[Move, ...] = ()
    dg: int = 0

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    def __str__(self) -> str:
        moves = ", ".join(str(m) for m in self.moves)
        return f"curve(cut={self.cut}; moves=[{moves}]; dg={self.dg})"


@dataclass(frozen=True)
class RegionData:
    ends: EndExpr | None
    genus: Genus

    def __str__(self) -> str:
        ends = "empty" if self.ends is None else str(self.ends)
        return f"region(genus={format_genus(self.genus)}, ends={ends})"


def shift(c: CurveSpec, n: int) -> CurveSpec:
    moves = tuple(Move(m.seg + n, m.piece, m.side, m.addr) for m in c.moves)
    return CurveSpec(c.cut + n, moves, c.dg)


# -- dyadic address sets ----------------------------------------------------
#
# A clopen part of a Cantor piece is a finite union of basic sets, each given by
# a binary address.  Sets are kept normalised: no address extends another and
# no two siblings both occur.

FULL = frozenset({""})
NONE: frozenset[str] = frozenset()


def _normalize(addrs: Iterable[str]) -> frozenset[str]:
    s = set(addrs)
    s = {a for a in s if not any(a[:k] in s for k in range(len(a)))}
    merged = True
    while merged:
        merged = False
        for a in sorted(s, key=len, reverse=True):
            if a and a in s:
                sib = a[:-1] + ("1" if a[-1] == "0" else "0")
                if sib in s:
                    s -= {a, sib}
                    s.add(a[:-1])
                    merged = True
    return frozenset(s)


def _covers(addrs: frozenset[str], a: str) -> bool:
    return any(a[:k] in addrs for k in range(len(a) + 1))


def _depth(addrs: Iterable[str]) -> int:
    return max((len(a) for a in addrs), default=0)


def _leaves(addrs: frozenset[str], depth: int) -> set[str]:
    out = set()
    for a in addrs:
        free = depth - len(a)
        for i in range(2 ** free):
            out.add(a + (format(i, f"0{free}b") if free else ""))
    return out


def _difference(a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
    d = max(_depth(a), _depth(b))
    return _normalize(_leaves(a, d) - _leaves(b, d))


def _complement(a: frozenset[str]) -> frozenset[str]:
    return _difference(FULL, a)


# -- splittings -------------------------------------------------------------


@dataclass(frozen=True)
class PieceInfo:
    pid: str
    germ: Germ
    form: EndExpr
    cantor: bool


@dataclass(frozen=True)
class Split:
    """Canonical state: segments below ``base`` are wholly on the minus side.

    ``minus`` lists, for segments at or above ``base``, the nonempty address
    sets of pieces on the minus side; segment ``base`` is never wholly minus.
    """

    base: int
    minus: tuple[tuple[tuple[int, int], frozenset[str]], ...]
    h: int

    @property
    def top(self) -> int:
        """Highest segment with anything on the minus side."""
        return max((seg for (seg, _), _ in self.minus), default=self.base - 1)

    @property
    def depth(self) -> int:
        return max((_depth(a) for _, a in self.minus), default=0)


class TCGraph:
    """Curve arithmetic for one translatable surface, given its pieces."""

    def __init__(self, cp: CanonicalPieces):
        self.cp = cp
        seg = cp.segment
        part = stable_partition(seg.ends) if seg.ends is not None else []
        self.pieces = tuple(
            PieceInfo(f"p{i}", g, stable_form(g), g.is_cantor) for i, (g, _) in enumerate(part)
        )
        self._pid = {p.pid: i for i, p in enumerate(self.pieces)}
        self.g = seg.genus if seg.genus not in (0, INF) else 0
        self.finite_class = {g: i for i, g in enumerate(cp.finite_classes)}
        self.cantor_class = {g: j for j, g in enumerate(cp.cantor_classes)}

    # -- conversion ---------------------------------------------------------

    def _make(self, base: int, mapping: dict[tuple[int, int], frozenset[str]], h: int) -> Split:
        if not self.pieces:
            return Split(0, (), h)
        mapping = {k: v for k, v in mapping.items() if v}
        k = len(self.pieces)
        while all(mapping.get((base, p)) == FULL for p in range(k)):
            for p in range(k):
                del mapping[(base, p)]
            base += 1
        return Split(base, tuple(sorted(mapping.items())), h)

    def minus_at(self, s: Split, seg: int, p: int) -> frozenset[str]:
        if seg < s.base:
            return FULL
        return dict(s.minus).get((seg, p), NONE)

    def split(self, c: CurveSpec) -> Split:
        if c.dg and not self.g:
            raise CurveError("genus moves need a segment of finite positive genus")
        seen: dict[tuple[int, int], list[str]] = {}
        for mv in c.moves:
            if mv.piece not in self._pid:
                raise CurveError(f"unknown piece {mv.piece!r} (pieces: {[p.pid for p in self.pieces]})")
            p = self._pid[mv.piece]
            if mv.addr is not None and not self.pieces[p].cantor:
                raise CurveError(f"piece {mv.piece} is not a Cantor piece and cannot be split")
            if mv.addr is not None and set(mv.addr) - {"0", "1"}:
                raise CurveError(f"bad address {mv.addr!r}")
            default = Side.MINUS if mv.seg < c.cut else Side.PLUS
            if mv.side is default:
                raise CurveError(f"move {mv} is trivial for cut {c.cut}")
            addr = mv.addr or ""
            prev = seen.setdefault((mv.seg, p), [])
            if any(a.startswith(addr) or addr.startswith(a) for a in prev):
                raise CurveError(f"move {mv} is redundant")
            prev.append(addr)
        base = min([c.cut] + [seg for seg, _ in seen if seg < c.cut])
        mapping = {(seg, p): FULL for seg in range(base, c.cut) for p in range(len(self.pieces))}
        for (seg, p), addrs in seen.items():
            norm = _normalize(addrs)
            mapping[(seg, p)] = _complement(norm) if seg < c.cut else norm
        return self._make(base, mapping, self.g * c.cut + c.dg)

    def curve(self, s: Split) -> CurveSpec:
        if not self.pieces:
            if not self.g:
                return CurveSpec(0, (), 0)
            lo = s.h // self.g
            k = min((lo, lo + 1), key=lambda k: (abs(s.h - self.g * k), k))
            return CurveSpec(k, (), s.h - self.g * k)
        best = None
        top = s.top
        for k in range(s.base, top + 2):
            moves = []
            for seg in range(s.base, top + 1):
                for p, info in enumerate(self.pieces):
                    addrs = self.minus_at(s, seg, p)
                    side = Side.PLUS if seg < k else Side.MINUS
                    shown = _complement(addrs) if seg < k else addrs
                    for a in sorted(shown):
                        moves.append(Move(seg, info.pid, side, a or None))
            dg = s.h - self.g * k
            key = (len(moves), abs(dg), k)
            if best is None or key < best[0]:
                best = (key, CurveSpec(k, tuple(moves), dg))
        return best[1]

    def canonical(self, c: CurveSpec) -> CurveSpec:
        return self.curve(self.split(c))

    # -- nesting and regions ------------------------------------------------

    def contains(self, x: Split, y: Split) -> bool:
        """Is the minus side of ``x`` inside the minus side of ``y``?"""
        if x.h > y.h or x.base > y.base:
            return False
        ymap = dict(y.minus)
        return all(
            seg < y.base or all(_covers(ymap.get((seg, p), NONE), a) for a in addrs)
            for (seg, p), addrs in x.minus
        )

    def region_atoms(self, x: Split, y: Split) -> dict[tuple[int, int], frozenset[str]]:
        out = {}
        for seg in range(x.base, y.top + 1):
            for p in range(len(self.pieces)):
                diff = _difference(self.minus_at(y, seg, p), self.minus_at(x, seg, p))
                if diff:
                    out[(seg, p)] = diff
        return out

    def region_of(self, x: Split, y: Split) -> RegionData:
        if not self.contains(x, y):
            raise NotNested("the first curve's minus side is not inside the second's")
        atoms = self.region_atoms(x, y)
        forms = [self.pieces[p].form for (_, p) in sorted(atoms)]
        ends = disjoint_union(forms)
        if ends is not None:
            ends = canonicalize(ends)
        if self.g:
            genus: Genus = y.h - x.h
        elif self.cp.segment.genus == INF and ends is not None and has_genus(ends):
            genus = INF
        else:
            genus = 0
        return RegionData(ends, genus)

    def matches(self, r: RegionData) -> bool:
        return any(r.genus == t.genus and is_homeomorphic(r.ends, t.ends) for t in self.cp.pieces)

    def adjacent_splits(self, x: Split, y: Split) -> bool:
        if x == y:
            return False
        if self.contains(x, y):
            return self.matches(self.region_of(x, y))
        if self.contains(y, x):
            return self.matches(self.region_of(y, x))
        return False

    # -- region decomposition along a path ------------------------------

    def _sort_key(self, seg: int, p: int) -> tuple:
        info = self.pieces[p]
        return (self.finite_class.get(info.germ, 0), seg, p)

    def _steps(self, x: Split, y: Split) -> list[Split] | None:
        """Curves from ``x`` (excluded) up to ``y`` with each step one piece."""
        atoms = self.region_atoms(x, y)
        finite = sorted((k for k in atoms if not self.pieces[k[1]].cantor), key=lambda k: self._sort_key(*k))
        dh = y.h - x.h
        if dh and not self.g:
            return None
        kinds: list = [("f", k) for k in finite] + [("h", None)] * dh
        if self.cp.edge_case_diameter2:
            kinds = [("e", None)]
        if not kinds:
            return None
        ell = len(kinds)
        portions = []
        for j in range(len(self.cp.cantor_classes)):
            parts = sorted(
                (seg, p, a)
                for (seg, p), addrs in atoms.items()
                if self.pieces[p].cantor and self.cantor_class[self.pieces[p].germ] == j
                for a in addrs
            )
            if not parts:
                return None
            while len(parts) < ell:
                i = min(range(len(parts)), key=lambda i: (len(parts[i][2]), i))
                seg, p, a = parts.pop(i)
                parts[i:i] = [(seg, p, a + "0"), (seg, p, a + "1")]
            portions.append([[q] for q in parts[:ell - 1]] + [parts[ell - 1:]])
        path = []
        mapping = {k: set(v) for k, v in x.minus}
        h = x.h
        for step, (kind, key) in enumerate(kinds):
            if kind == "f":
                mapping.setdefault(key, set()).add("")
            elif kind == "h":
                h += 1
            for portion in portions:
                for seg, p, a in portion[step]:
                    mapping.setdefault((seg, p), set()).add(a)
            base = x.base
            cur = self._make(base, {k: _normalize(v) for k, v in mapping.items()}, h)
            path.append(cur)
        if path[-1] != y:  # pragma: no cover - guarded by tests
            raise AssertionError("path decomposition did not reach its target")
        return path

    def connect(self, x: Split, y: Split) -> list[Split]:
        if x == y:
            return [x]
        if self.contains(x, y):
            steps = self._steps(x, y)
            if steps is not None:
                return [x] + steps
        if self.contains(y, x):
            steps = self._steps(y, x)
            if steps is not None:
                return list(reversed([y] + steps))
        k0 = max(x.top, y.top, x.base - 1, y.base - 1) + 1
        for k in range(k0, k0 + 4):
            for extra in (0, 1):
                h = max(self.g * k, x.h, y.h) + extra
                gamma = self._make(k, {}, h)
                up_x = self._steps(x, gamma)
                up_y = self._steps(y, gamma)
                if up_x is not None and up_y is not None:
                    return [x] + up_x + list(reversed([y] + up_y[:-1]))
        raise AssertionError("no connecting curve found")  # pragma: no cover

    # -- bounded search -------------------------------------------------

    def frame(self, lo: int, hi: int, depth: int) -> "Frame":
        return Frame(self, lo, hi, depth)


def _submasks(m: int) -> list[int]:
    out = []
    sub = m
    while sub:
        out.append(sub)
        sub = (sub - 1) & m
    return out


class Frame:
    """Segments ``lo..hi`` with Cantor pieces cut to dyadic ``depth``; all
    curves inside agree with the frame outside it."""

    def __init__(self, graph: TCGraph, lo: int, hi: int, depth: int):
        self.graph, self.lo, self.hi, self.depth = graph, lo, hi, depth
        self.atoms: list[tuple[int, int, str]] = []
        for seg in range(lo, hi + 1):
            for p, info in enumerate(graph.pieces):
                if info.cantor:
                    self.atoms.extend((seg, p, a) for a in sorted(_leaves(FULL, depth)))
                else:
                    self.atoms.append((seg, p, ""))
        self.full = (1 << len(self.atoms)) - 1
        self.finite_masks = [0] * len(graph.cp.finite_classes)
        self.cantor_masks = [0] * len(graph.cp.cantor_classes)
        for i, (seg, p, a) in enumerate(self.atoms):
            germ = graph.pieces[p].germ
            if graph.pieces[p].cantor:
                self.cantor_masks[graph.cantor_class[germ]] |= 1 << i
            else:
                self.finite_masks[graph.finite_class[germ]] |= 1 << i

    def fits(self, s: Split) -> bool:
        return self.lo <= s.base and s.top <= self.hi and s.depth <= self.depth

    def encode(self, s: Split) -> tuple[int, int]:
        if not self.fits(s):
            raise ValueError("curve does not fit in the search frame")
        mask = 0
        for i, (seg, p, a) in enumerate(self.atoms):
            if _covers(self.graph.minus_at(s, seg, p), a):
                mask |= 1 << i
        return mask, s.h

    def decode(self, state: tuple[int, int]) -> Split:
        mask, h = state
        mapping: dict[tuple[int, int], set[str]] = {}
        for i, (seg, p, a) in enumerate(self.atoms):
            if mask >> i & 1:
                mapping.setdefault((seg, p), set()).add(a)
        return self.graph._make(self.lo, {k: _normalize(v) for k, v in mapping.items()}, h)

    def neighbors(self, state: tuple[int, int], hlo: int, hhi: int) -> Iterator[tuple[int, int]]:
        mask, h = state
        graph = self.graph
        for avail, dh in ((self.full & ~mask, 1), (mask, -1)):
            choices = [_submasks(avail & cm) for cm in self.cantor_masks]
            if any(not c for c in choices):
                continue
            extras = [sum(combo) for combo in product(*choices)] if choices else [0]
            for fm in self.finite_masks:
                bits = avail & fm
                while bits:
                    b = bits & -bits
                    bits ^= b
                    for x in extras:
                        yield mask ^ (b | x), h
            if graph.cp.has_handle_piece and hlo <= h + dh <= hhi:
                for x in extras:
                    yield mask ^ x, h + dh
            if graph.cp.edge_case_diameter2:
                for x in extras:
                    yield mask ^ x, h


@lru_cache(maxsize=64)
def graph_for(cp: CanonicalPieces) -> TCGraph:
    return TCGraph(cp)


def curve_canonical(c: CurveSpec, cp: CanonicalPieces) -> CurveSpec:
    return graph_for(cp).canonical(c)


def nested(a: CurveSpec, b: CurveSpec, cp: CanonicalPieces) -> bool:
    g = graph_for(cp)
    x, y = g.split(a), g.split(b)
    return g.contains(x, y) or g.contains(y, x)


def region(a: CurveSpec, b: CurveSpec, cp: CanonicalPieces) -> RegionData:
    g = graph_for(cp)
    return g.region_of(g.split(a), g.split(b))


def adjacent(a: CurveSpec, b: CurveSpec, cp: CanonicalPieces) -> bool:
    g = graph_for(cp)
    return g.adjacent_splits(g.split(a), g.split(b))


def connect_path(a: CurveSpec, b: CurveSpec, cp: CanonicalPieces) -> list[CurveSpec]:
    g = graph_for(cp)
    return [g.curve(s) for s in g.connect(g.split(a), g.split(b))]


def _search_frame(g: TCGraph, splits: list[Split], budget: int, depth: int | None = None):
    lo = min(s.base for s in splits) - budget
    hi = max(max(s.top for s in splits), lo + budget) + budget
    d = max(s.depth for s in splits) if depth is None else max(depth, *(s.depth for s in splits))
    hlo = min(s.h for s in splits) - budget
    hhi = max(s.h for s in splits) + budget
    return g.frame(lo, hi, d), hlo, hhi


def bfs_distance(
    a: CurveSpec,
    b: CurveSpec,
    cp: CanonicalPieces,
    budget: int,
    depth: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> int | str:
    """Exact distance in the subgraph of curves inside a frame ``budget``
    segments (and handles) wider than both endpoints, else ``BUDGET_EXCEEDED``."""
    if budget < 1:
        raise ValueError("budget must be positive")
    g = graph_for(cp)
    x, y = g.split(a), g.split(b)
    if x == y:
        return 0
    frame, hlo, hhi = _search_frame(g, [x, y], budget, depth)
    start, goal = frame.encode(x), frame.encode(y)
    dist = [{start: 0}, {goal: 0}]
    fronts = [[start], [goal]]
    seen = 2
    while fronts[0] and fronts[1]:
        side = 0 if len(fronts[0]) <= len(fronts[1]) else 1
        mine, other = dist[side], dist[1 - side]
        nxt = []
        best = None
        for state in fronts[side]:
            d = mine[state]
            for n in frame.neighbors(state, hlo, hhi):
                if n in other:
                    total = d + 1 + other[n]
                    best = total if best is None else min(best, total)
                if n not in mine:
                    mine[n] = d + 1
                    nxt.append(n)
                    seen += 1
                    if seen > max_vertices:
                        return BUDGET_EXCEEDED
        if best is not None:
            return best
        fronts[side] = nxt
    return BUDGET_EXCEEDED


@dataclass(frozen=True)
class Ball:
    center: CurveSpec
    radius: int
    vertices: tuple[tuple[CurveSpec, int], ...]
    edges: tuple[tuple[int, int], ...]
    budget_exceeded: bool

    def to_json(self) -> dict:
        return {
            "center": str(self.center),
            "radius": self.radius,
            "vertices": [{"id": i, "curve": str(c), "distance": d} for i, (c, d) in enumerate(self.vertices)],
            "edges": [list(e) for e in self.edges],
            "budgetExceeded": self.budget_exceeded,
        }

    def to_dot(self) -> str:
        lines = ["graph TC {"]
        for c, d in self.vertices:
            lines.append(f'  "{c}";  // distance {d}')
        for i, j in self.edges:
            lines.append(f'  "{self.vertices[i][0]}" -- "{self.vertices[j][0]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def ball(
    center: CurveSpec,
    radius: int,
    cp: CanonicalPieces,
    budget: int,
    depth: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Ball:
    """All curves within ``radius`` of ``center`` inside the budgeted frame."""
    g = graph_for(cp)
    x = g.split(center)
    frame, hlo, hhi = _search_frame(g, [x], budget, depth)
    start = frame.encode(x)
    dist = {start: 0}
    order = [start]
    queue = deque([start])
    clipped = bool(g.pieces) or radius > budget
    while queue:
        s = queue.popleft()
        if dist[s] == radius:
            continue
        for n in frame.neighbors(s, hlo, hhi):
            if n not in dist:
                dist[n] = dist[s] + 1
                order.append(n)
                queue.append(n)
                if len(dist) > max_vertices:
                    return _finish_ball(g, frame, center, radius, dist, order, hlo, hhi, True)
    return _finish_ball(g, frame, center, radius, dist, order, hlo, hhi, clipped)


def _finish_ball(g, frame, center, radius, dist, order, hlo, hhi, clipped) -> Ball:
    curves = {s: g.curve(frame.decode(s)) for s in order}
    ranked = sorted(order, key=lambda s: (dist[s], str(curves[s])))
    index = {s: i for i, s in enumerate(ranked)}
    edges = set()
    for s in ranked:
        for n in frame.neighbors(s, hlo, hhi):
            if n in index and index[s] < index[n]:
                edges.add((index[s], index[n]))
    vertices = tuple((curves[s], dist[s]) for s in ranked)
    return Ball(g.curve(g.split(center)), radius, vertices, tuple(sorted(edges)), clipped)


# -- curve literals ---------------------------------------------------------

_SIDES = {"-": Side.MINUS, "+": Side.PLUS, "minus": Side.MINUS, "plus": Side.PLUS}


def parse_curve(text: str) -> CurveSpec:
    """``curve(cut=K; moves=[(seg, piece[:addr], side), ...]; dg=N)``.

    ``moves`` and ``dg`` may be omitted; sides are ``-``/``+`` or ``minus``/``plus``.
    """
    sc = Scanner(text)
    sc.expect("curve")
    sc.expect("(")
    sc.expect("cut")
    sc.expect("=")
    cut = sc.integer(signed=True)
    moves: list[Move] = []
    dg = 0
    while sc.accept(";"):
        key = sc.word()
        sc.expect("=")
        if key == "moves":
            sc.expect("[")
            if not sc.accept("]"):
                while True:
                    moves.append(_move(sc))
                    if sc.accept("]"):
                        break
                    sc.expect(",")
        elif key == "dg":
            dg = sc.integer(signed=True)
        else:
            raise sc.error(f"unknown curve field {key!r}")
    sc.expect(")")
    if not sc.at_end():
        raise sc.error("unexpected trailing text")
    return CurveSpec(cut, tuple(moves), dg)


def _move(sc: Scanner) -> Move:
    sc.expect("(")
    seg = sc.integer(signed=True)
    sc.expect(",")
    piece = sc.word()
    addr = None
    if sc.accept(":"):
        sc.skip_ws()
        start = sc.pos
        while sc.pos < len(sc.text) and sc.text[sc.pos] in "01":
            sc.pos += 1
        addr = sc.text[start:sc.pos]
        if not addr:
            raise sc.error("expected a binary address")
    sc.expect(",")
    sc.skip_ws()
    if sc.peek() in "+-":
        side_text = sc.peek()
        sc.pos += 1
    else:
        side_text = sc.word().lower()
    if side_text not in _SIDES:
        raise ParseError(f"bad side {side_text!r}", sc.pos)
    sc.expect(")")
    return Move(seg, piece, _SIDES[side_text], addr)
