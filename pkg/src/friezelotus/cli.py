"""Command-line front end.

Every subcommand takes one input source (--quiddity, --rational, --slopes,
--poly, or --stdin for a lotus JSON produced by another invocation) and
emits human text by default or a stable JSON document with --json.  Exit
codes: 0 success, 1 domain error (one-line diagnostic on stderr), 2 usage
error.

JSON schemas
============
lotus     {"petals": [[[ux,uy],[vx,vy]], ...], "marks": [[x,y], ...]}
frieze    {"m": int, "quiddity": [...], "entries": {"i,j": value, ...}}
graph     {"weights": [...], "arrows": [node, ...]}   (nodes 1-based)
embedding {"vertices": [[x,y], ...]}
curve     {"factors": [[d,c], ...], "polynomial": str}
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .contfrac import Rational, hj_expand, kidoh_dual
from .frieze import Frieze, frieze_from_quiddity, frieze_of_triangulation
from .lotus import (Lotus, Petal, embed_polygon, lotus_of_polygon,
                    lotus_of_slope, lotus_of_slopes, polygon_of_lotus)
from .polygon import polygon_of_cf
from .polyparse import parse_poly
from .render import RenderOptions, render_frieze_text, render_graph_dot, render_lotus_svg
from .resolution import (ResolutionGraph, count_resolution_graphs,
                         curve_of_lotus, graph_of_lotus, is_newton_nondegenerate,
                         lotus_of_poly, partial_resolutions)
from .transform import mutate_lotus, reduce as reduce_polygon, reduction_chain


def main(argv: Sequence[str] | None = None) -> int:
    code, output = run(list(sys.argv[1:] if argv is None else argv))
    if output:
        sys.stdout.write(output)
    return code


_PARSER: argparse.ArgumentParser | None = None


def run(argv: Sequence[str], stdin_text: str | None = None) -> tuple[int, str]:
    """Dispatch one invocation; returns (exit code, stdout text).

    Usage problems exit 2 via argparse; domain errors return 1 with the
    diagnostic on stderr.
    """
    global _PARSER
    if _PARSER is None:
        _PARSER = _build_parser()
    parser = _PARSER
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        output = args.handler(args, stdin_text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(output)
        return 0, ""
    return 0, output


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friezelotus",
        description="Exact frieze / triangulation / lotus / resolution-graph calculator.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hj", help="continued-fraction expansion and its dual")
    p.add_argument("rational", help="value n/q (or a bare integer)")
    _common(p)
    p.set_defaults(handler=_cmd_hj)

    p = sub.add_parser("frieze", help="build and print a frieze")
    _input_opts(p, quiddity=True, rational=True, poly=True, stdin=True)
    p.add_argument("--periods", type=int, default=1, help="periods in the text grid")
    _common(p)
    p.set_defaults(handler=_cmd_frieze)

    p = sub.add_parser("embed", help="embed a quiddity into the lattice")
    _input_opts(p, quiddity=True)
    p.add_argument("-k", type=int, default=0, help="quiddity position placed at (0,1)")
    _common(p)
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("lotus", help="petal chain of slopes or a polynomial")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    _common(p)
    p.set_defaults(handler=_cmd_lotus)

    p = sub.add_parser("graph", help="dual resolution graph")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    _common(p)
    p.set_defaults(handler=_cmd_graph)

    p = sub.add_parser("reduce", help="cut the polygon along a diagonal")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    p.add_argument("--diagonal", required=True, help="diagonal i,j (vertex labels)")
    _common(p)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("mutate", help="flip a diagonal and re-embed the lotus")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    p.add_argument("--diagonal", required=True, help="diagonal i,j (vertex labels)")
    _common(p)
    p.set_defaults(handler=_cmd_mutate)

    p = sub.add_parser("partials", help="all partial resolutions")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    _common(p)
    p.set_defaults(handler=_cmd_partials)

    p = sub.add_parser("count", help="number of weighted A_n resolution chains")
    p.add_argument("n", type=int)
    _common(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("render", help="emit SVG, DOT, or a frieze grid")
    _input_opts(p, slopes=True, rational=True, poly=True, quiddity=True, stdin=True)
    p.add_argument("--format", choices=("svg", "dot", "text"), required=True)
    p.add_argument("--periods", type=int, default=1)
    p.add_argument("--scale", type=float, default=40.0)
    p.add_argument("--grid", action="store_true", help="draw lattice grid lines (svg)")
    p.add_argument("--weights", action="store_true", help="label weights (svg)")
    _common(p)
    p.set_defaults(handler=_cmd_render)

    return parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", metavar="FILE", help="write output to FILE")


def _input_opts(p: argparse.ArgumentParser, *, quiddity=False, rational=False,
                slopes=False, poly=False, stdin=False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    if quiddity:
        group.add_argument("--quiddity", help="comma-separated quiddity, e.g. 1,2,2,3,2,1,3,4")
    if rational:
        group.add_argument("--rational", help="slope n/q")
    if slopes:
        group.add_argument("--slopes", help="comma-separated slopes, e.g. 3/2,2/1")
    if poly:
        group.add_argument("--poly", help="polynomial, e.g. \"x^3-y^2\"")
    if stdin:
        group.add_argument("--stdin", action="store_true",
                           help="read a lotus JSON document from stdin")


# ---------------------------------------------------------------------------
# input decoding


def _parse_quiddity(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad quiddity {text!r}: comma-separated integers expected") from exc


def _parse_diagonal(text: str) -> tuple[int, int]:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad diagonal {text!r}: expected i,j") from exc
    return (min(i, j), max(i, j))


def _lotus_from_args(args, stdin_text: str | None) -> Lotus:
    if getattr(args, "stdin", False):
        return lotus_from_json(stdin_text if stdin_text is not None else sys.stdin.read())
    if getattr(args, "slopes", None):
        return lotus_of_slopes(Rational.parse(s) for s in args.slopes.split(","))
    if getattr(args, "rational", None):
        return lotus_of_slope(Rational.parse(args.rational))
    if getattr(args, "poly", None):
        f = parse_poly(args.poly)
        if not is_newton_nondegenerate(f):
            raise ValueError(f"{args.poly!r} is degenerate: a compact-edge restriction "
                             "is not square-free away from the axes")
        return lotus_of_poly(f)
    if getattr(args, "quiddity", None):
        q = _parse_quiddity(args.quiddity)
        from .polygon import polygon_from_quiddity
        return lotus_of_polygon(polygon_from_quiddity(q), 0)
    raise ValueError("no lotus input given")


def _frieze_from_args(args, stdin_text: str | None) -> Frieze:
    if getattr(args, "quiddity", None):
        return frieze_from_quiddity(_parse_quiddity(args.quiddity))
    if getattr(args, "rational", None):
        value = Rational.parse(args.rational)
        return frieze_of_triangulation(polygon_of_cf(hj_expand(value)))
    lotus = _lotus_from_args(args, stdin_text)
    poly, _ = polygon_of_lotus(lotus)
    return frieze_of_triangulation(poly)


# ---------------------------------------------------------------------------
# JSON codecs


def lotus_to_json(l: Lotus) -> dict:
    return {"petals": [[list(p.u), list(p.v)] for p in sorted(l.petals)],
            "marks": [list(pt) for pt in sorted(l.marks)]}


def lotus_from_json(text: str) -> Lotus:
    try:
        doc = json.loads(text)
        petals = frozenset(Petal((u[0], u[1]), (v[0], v[1])) for u, v in doc["petals"])
        marks = frozenset((pt[0], pt[1]) for pt in doc.get("marks", ()))
    except (KeyError, TypeError, IndexError, json.JSONDecodeError) as exc:
        raise ValueError(f"bad lotus JSON: {exc}") from exc
    return Lotus(petals, marks)


def graph_to_json(g: ResolutionGraph) -> dict:
    return {"weights": list(g.weights), "arrows": [a + 1 for a in sorted(g.arrows)]}


def frieze_to_json(f: Frieze) -> dict:
    return {"m": f.m, "quiddity": list(f.quiddity),
            "entries": {f"{i},{j}": v for (i, j), v in sorted(f.entries.items())}}


def _dump(doc) -> str:
    return json.dumps(doc, separators=(", ", ": "), sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_hj(args, stdin_text) -> str:
    value = Rational.parse(args.rational)
    terms = hj_expand(value)
    dual = kidoh = None
    if value.num > value.den:
        kd = kidoh_dual(value)
        dual, kidoh = kd.dual, kd
    if args.json:
        doc = {"rational": str(value), "expansion": list(terms)}
        if dual is not None:
            doc["dual"] = list(dual)
            doc["kidoh"] = {"c": list(kidoh.c), "d": list(kidoh.d)}
        return _dump(doc)
    lines = [_bracket(terms)]
    if dual is not None:
        lines.append(f"dual {_bracket(dual)}")
    return "\n".join(lines) + "\n"


def _bracket(terms) -> str:
    return "[" + ",".join(str(t) for t in terms) + "]"


def _cmd_frieze(args, stdin_text) -> str:
    f = _frieze_from_args(args, stdin_text)
    if args.json:
        return _dump(frieze_to_json(f))
    return render_frieze_text(f, args.periods)


def _cmd_embed(args, stdin_text) -> str:
    q = _parse_quiddity(args.quiddity)
    verts = embed_polygon(q, args.k)
    if args.json:
        return _dump({"vertices": [list(v) for v in verts]})
    return " ".join(f"({x},{y})" for x, y in verts) + "\n"


def _cmd_lotus(args, stdin_text) -> str:
    l = _lotus_from_args(args, stdin_text)
    if args.json:
        return _dump(lotus_to_json(l))
    lines = [f"petals {len(l.petals)}"]
    for p in sorted(l.petals):
        lines.append(f"  {p.u} {p.v} apex {p.apex}")
    if l.marks:
        lines.append("marks " + " ".join(str(pt) for pt in sorted(l.marks)))
    if not l.is_segment:
        lines.append(f"curve {curve_of_lotus(l)}")
    return "\n".join(lines) + "\n"


def _cmd_graph(args, stdin_text) -> str:
    g = graph_of_lotus(_lotus_from_args(args, stdin_text))
    if args.json:
        return _dump(graph_to_json(g))
    lines = [" ".join(str(w) for w in g.weights)]
    for a in sorted(g.arrows):
        lines.append(f"arrow {a + 1}")
    return "\n".join(lines) + "\n"


def _cmd_reduce(args, stdin_text) -> str:
    l = _lotus_from_args(args, stdin_text)
    poly, _ = polygon_of_lotus(l)
    result = reduce_polygon(poly, _parse_diagonal(args.diagonal))
    if args.json:
        return _dump({"quiddity": list(result.quiddity),
                      "kept": {"m": result.polygon.m,
                               "diagonals": sorted(map(list, result.polygon.diagonals))},
                      "dropped": {"m": result.dropped.m,
                                  "diagonals": sorted(map(list, result.dropped.diagonals))}})
    return (f"quiddity {','.join(map(str, result.quiddity))}\n"
            f"kept {result.polygon.m}-gon, dropped {result.dropped.m}-gon\n")


def _cmd_mutate(args, stdin_text) -> str:
    l = _lotus_from_args(args, stdin_text)
    mutated = mutate_lotus(l, _parse_diagonal(args.diagonal))
    if args.json:
        return _dump(lotus_to_json(mutated))
    lines = [f"petals {len(mutated.petals)}"]
    for p in sorted(mutated.petals):
        lines.append(f"  {p.u} {p.v} apex {p.apex}")
    lines.append(f"curve {curve_of_lotus(mutated)}")
    return "\n".join(lines) + "\n"


def _cmd_partials(args, stdin_text) -> str:
    l = _lotus_from_args(args, stdin_text)
    pairs = partial_resolutions(l)
    if args.json:
        return _dump({"partials": [{"weights": list(g.weights),
                                    "petals": len(sub.petals)}
                                   for sub, g in pairs]})
    lines = [" ".join(str(w) for w in g.weights) for _, g in pairs]
    return "\n".join(lines) + "\n"


def _cmd_count(args, stdin_text) -> str:
    n = args.n
    value = count_resolution_graphs(n)
    if args.json:
        return _dump({"n": n, "count": value})
    return f"{value}\n"


def _cmd_render(args, stdin_text) -> str:
    if args.format == "text":
        return render_frieze_text(_frieze_from_args(args, stdin_text), args.periods)
    if args.format == "dot":
        return render_graph_dot(graph_of_lotus(_lotus_from_args(args, stdin_text)))
    options = RenderOptions(scale=args.scale, show_grid=args.grid,
                            label_weights=args.weights)
    return render_lotus_svg(_lotus_from_args(args, stdin_text), options)


if __name__ == "__main__":
    sys.exit(main())
