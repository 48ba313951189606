"""Command-line front end.

Exit codes: 0 success, 2 unparsable or invalid input, 3 outside the supported
fragment, 4 not translatable (for commands that need a translatable surface).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any, Callable

from .classifier import Tag, classify
from .decomp import NotTranslatable, build_segment, canonical_pieces, piece_summary
from .endspace import canonical_segment, canonical_surface, canonicalize
from .exprs import EndExpr, ExprError, SegmentSpec, SurfaceSpec
from .grammar import parse
from .preorder import LimitChain, RankInterval, germ_of_classes, immediate_predecessors, maximal_germs
from .tcgraph import CurveError, ball, bfs_distance, connect_path, curve_canonical, parse_curve

SCHEMA = "bigmcg.report/1"

EXIT_OK, EXIT_INPUT, EXIT_FRAGMENT, EXIT_NOT_TRANSLATABLE = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_inputs(arg: str) -> tuple[list[str], bool]:
    """Entries from stdin, a file (one per line, ``#`` comments), or inline text.

    The flag says whether the source was a multi-entry corpus.
    """
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        return [arg], False
    entries = [ln.strip() for ln in text.splitlines()]
    entries = [ln for ln in entries if ln and not ln.startswith("#")]
    if not entries:
        raise CliError("no input found", EXIT_INPUT)
    return entries, len(entries) > 1


def _surface(text: str) -> SurfaceSpec:
    obj = parse(text)
    if not isinstance(obj, SurfaceSpec):
        raise CliError(f"expected surface(genus=..., ends=...), got {text!r}", EXIT_INPUT)
    return obj


def _germ_report(ends: EndExpr) -> dict[str, Any]:
    ms = maximal_germs(ends)
    classes = []
    for d in germ_of_classes(ends):
        if isinstance(d, RankInterval):
            classes.append({"interval": str(d)})
        else:
            classes.append({"germ": str(d[0]), "count": str(d[1])})
    preds = []
    for g in ms.germs:
        p = immediate_predecessors(ends, g)
        if isinstance(p, LimitChain):
            preds.append({"germ": str(g), "limitChain": [str(r) for r in p.ranks]})
        else:
            preds.append({"germ": str(g), "predecessors": [str(x) for x in p]})
    return {
        "maximal": [{"germ": str(g), "count": str(n), "stableForm": str(g.stable_form)} for g, n in ms],
        "classes": classes,
        "immediatePredecessors": preds,
    }


def classify_report(text: str) -> tuple[dict[str, Any], int]:
    s = _surface(text)
    verdict = classify(s)
    report: dict[str, Any] = {
        "schema": SCHEMA,
        "input": text,
        "canonical": str(canonical_surface(s)),
        "germs": _germ_report(s.ends)["maximal"],
        "verdict": verdict.to_json(),
        "segment": None,
        "pieces": None,
    }
    if verdict.translatable:
        seg = build_segment(s)
        report["segment"] = str(seg)
        report["pieces"] = piece_summary(canonical_pieces(seg, s))
    code = EXIT_FRAGMENT if verdict.tag is Tag.OUTSIDE_FRAGMENT else EXIT_OK
    return report, code


def _pieces_for(text: str):
    s = _surface(text)
    verdict = classify(s)
    if verdict.tag is Tag.OUTSIDE_FRAGMENT:
        raise CliError(f"{s} is outside the supported fragment", EXIT_FRAGMENT)
    try:
        seg = build_segment(s)
    except NotTranslatable as err:
        raise CliError(str(err), EXIT_NOT_TRANSLATABLE) from None
    return s, seg, canonical_pieces(seg, s)


def decompose_report(text: str) -> tuple[dict[str, Any], int]:
    s, seg, cp = _pieces_for(text)
    out = {"schema": SCHEMA, "input": text, **piece_summary(cp)}
    if cp.edge_case_diameter2:
        out["note"] = "pieces = {segment}; the curve graph has diameter <= 2"
    return out, EXIT_OK


def _emit(obj: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, sort_keys=False) + "\n"
    if isinstance(obj, list):
        return "".join(_emit(o, fmt) for o in obj)
    lines = []
    for k, v in obj.items():
        if k == "schema":
            continue
        lines.append(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
    return "\n".join(lines) + "\n"


def _timed(fn: Callable, args) -> tuple[Any, int]:
    start = time.perf_counter()
    out, code = fn(args)
    if args.timing and isinstance(out, dict):
        out["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return out, code


def _per_entry(builder: Callable[[str], tuple[dict, int]]):
    def run(args) -> tuple[Any, int]:
        entries, corpus = read_inputs(args.input)
        results, code = [], EXIT_OK
        for entry in entries:
            try:
                out, c = builder(entry)
            except (ExprError, CliError) as err:
                if not corpus:
                    raise
                c = err.code if isinstance(err, CliError) else EXIT_INPUT
                out = {"schema": SCHEMA, "input": entry, "error": str(err)}
            results.append(out)
            code = max(code, c)
        return (results if corpus else results[0]), code

    return run


def _canon(text: str) -> tuple[dict, int]:
    obj = parse(text)
    if isinstance(obj, SurfaceSpec):
        canon = str(canonical_surface(obj))
    elif isinstance(obj, SegmentSpec):
        canon = str(canonical_segment(obj))
    else:
        canon = str(canonicalize(obj))
    return {"schema": SCHEMA, "input": text, "canonical": canon}, EXIT_OK


def _preorder(text: str) -> tuple[dict, int]:
    obj = parse(text)
    ends = obj.ends if isinstance(obj, (SurfaceSpec, SegmentSpec)) else obj
    if ends is None:
        raise CliError("empty end space", EXIT_INPUT)
    return {"schema": SCHEMA, "input": text, "canonical": str(canonicalize(ends)), **_germ_report(ends)}, EXIT_OK


def _single(args) -> str:
    entries, corpus = read_inputs(args.input)
    if corpus:
        raise CliError("this command takes a single surface", EXIT_INPUT)
    return entries[0]


def cmd_graph(args) -> tuple[Any, int]:
    _, _, cp = _pieces_for(_single(args))
    center = curve_canonical(parse_curve(args.center), cp)
    b = ball(center, args.radius, cp, args.budget)
    if args.figure:
        from .plotting import draw_ball

        draw_ball(b, args.figure)
    if args.format == "dot":
        return b.to_dot(), EXIT_OK
    return {"schema": SCHEMA, "input": args.input, **b.to_json()}, EXIT_OK


def cmd_path(args) -> tuple[Any, int]:
    _, _, cp = _pieces_for(_single(args))
    a = curve_canonical(parse_curve(args.a), cp)
    b = curve_canonical(parse_curve(args.b), cp)
    path = connect_path(a, b, cp)
    dist = bfs_distance(a, b, cp, args.budget) if args.distance else None
    if args.format == "json":
        out = {"schema": SCHEMA, "input": args.input, "path": [str(c) for c in path], "length": len(path) - 1}
        if dist is not None:
            out["bfsDistance"] = dist
        return out, EXIT_OK
    if not args.quiet:
        extra = "" if dist is None else f" (bfs distance {dist})"
        print(f"length {len(path) - 1}{extra}", file=sys.stderr)
    return "".join(f"{c}\n" for c in path), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bigmcg", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress diagnostics on stderr")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to reports")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, formats=("json", "text"), **kw):
        sp = sub.add_parser(name, help=help_, parents=[common], **kw)
        sp.add_argument("input", help="surface text, a file (one entry per line), or - for stdin")
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    add("classify", "classify a surface")
    add("decompose", "segment and canonical pieces of a translatable surface")
    add("preorder", "maximal germs, classes and predecessors")
    add("canon", "canonical form of a surface, segment or end expression", formats=("text", "json"))
    g = add("graph", "ball in the translatable curve graph", formats=("json", "dot"))
    g.add_argument("--radius", type=int, default=2)
    g.add_argument("--budget", type=int, default=3, help="frame margin in segments and handles")
    g.add_argument("--center", default="curve(cut=0)")
    g.add_argument("--figure", metavar="PNG", help="also draw the ball to this file")
    pa = add("path", "connecting path between two curves", formats=("text", "json"))
    pa.add_argument("a", help="curve literal")
    pa.add_argument("b", help="curve literal")
    pa.add_argument("--budget", type=int, default=2)
    pa.add_argument("--distance", action="store_true", help="also compute the BFS distance")
    return p


COMMANDS: dict[str, Callable] = {
    "classify": _per_entry(classify_report),
    "decompose": _per_entry(decompose_report),
    "preorder": _per_entry(_preorder),
    "canon": _per_entry(_canon),
    "graph": cmd_graph,
    "path": cmd_path,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = _timed(COMMANDS[args.command], args)
    except CliError as err:
        _diag(args, f"error: {err}")
        return err.code
    except (ExprError, CurveError) as err:
        _diag(args, f"error: {err}")
        return EXIT_INPUT
    if args.command == "canon" and args.format == "text":
        out = "".join(f"{o['canonical']}\n" for o in (out if isinstance(out, list) else [out]))
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        sys.stdout.write(_emit(out, args.format if args.format != "dot" else "json"))
    return code


def _diag(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
