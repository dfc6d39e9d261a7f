"""Deterministic emitters: lotus SVG, frieze text grids, graph DOT."""

from __future__ import annotations

from dataclasses import dataclass

from .frieze import Frieze
from .lotus import Lotus, incidence_counts, lateral_boundary
from .resolution import ResolutionGraph


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 40.0
    show_marks: bool = True
    show_grid: bool = False
    label_weights: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("scale must be positive")


def _fmt(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return text if text != "-0" else "0"


def render_lotus_svg(l: Lotus, options: RenderOptions = RenderOptions()) -> str:
    """Standalone SVG: petals as filled triangles at exact lattice positions
    (y axis flipped so lattice up renders up), the lateral boundary as a
    highlighted polyline, marks as filled circles."""
    margin = 1
    pts = l.vertices()
    max_x = max(p[0] for p in pts) + margin
    max_y = max(p[1] for p in pts) + margin
    scale = options.scale

    def at(p: tuple[int, int]) -> str:
        return f"{_fmt(p[0] * scale)},{_fmt((max_y - p[1]) * scale)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(max_x * scale)}" height="{_fmt(max_y * scale)}" '
        f'viewBox="0 0 {_fmt(max_x * scale)} {_fmt(max_y * scale)}">',
    ]
    if options.show_grid:
        for gx in range(max_x + 1):
            lines.append(f'  <line x1="{_fmt(gx * scale)}" y1="0" x2="{_fmt(gx * scale)}" '
                         f'y2="{_fmt(max_y * scale)}" stroke="#dddddd" stroke-width="1"/>')
        for gy in range(max_y + 1):
            lines.append(f'  <line x1="0" y1="{_fmt(gy * scale)}" x2="{_fmt(max_x * scale)}" '
                         f'y2="{_fmt(gy * scale)}" stroke="#dddddd" stroke-width="1"/>')
    for petal in sorted(l.petals):
        corners = " ".join(at(p) for p in petal.points)
        lines.append(f'  <polygon points="{corners}" fill="#f5c87a" '
                     f'stroke="#333333" stroke-width="1"/>')
    boundary = lateral_boundary(l)
    path = " ".join(at(p) for p in boundary.vertices)
    lines.append(f'  <polyline points="{path}" fill="none" stroke="#1f4fd8" '
                 f'stroke-width="3"/>')
    if options.label_weights and not l.is_segment:
        counts = incidence_counts(l)
        for p in boundary.interior:
            lines.append(f'  <text x="{_fmt(p[0] * scale + 4)}" '
                         f'y="{_fmt((max_y - p[1]) * scale - 4)}" '
                         f'font-size="{_fmt(scale / 3)}">{-counts[p]}</text>')
    if options.show_marks:
        for p in sorted(l.marks):
            cx, cy = p[0] * scale, (max_y - p[1]) * scale
            lines.append(f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                         f'r="{_fmt(scale / 8)}" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_frieze_text(f: Frieze, periods: int = 1) -> str:
    """Offset grid: row 0s, row 1s, the interior rows, row 1s, row 0s.

    Row d holds the entries (i, i+d) for i = 0 .. periods*m - 1; consecutive
    rows are shifted by half a cell, entries right-aligned in fixed cells.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    m = f.m
    count = periods * m
    widest = max(len(str(v)) for v in f.entries.values())
    cell = 2 * ((widest + 2) // 2 + 1)
    half = cell // 2
    out = []
    for d in range(m + 1):
        row = [f.entry(i, i + d) for i in range(count)]
        text = [" "] * (d * half + count * cell)
        for i, val in enumerate(row):
            s = str(val)
            end = d * half + i * cell + cell
            text[end - len(s):end] = list(s)
        out.append("".join(text).rstrip())
    return "\n".join(out) + "\n"


def render_graph_dot(g: ResolutionGraph) -> str:
    """Graphviz source for the weighted chain; arrowheads become unlabeled
    point nodes attached with directed edges."""
    lines = ["graph resolution {", "  rankdir=LR;", '  node [shape=circle];']
    for t, w in enumerate(g.weights, start=1):
        lines.append(f'  E{t} [label="{w}"];')
    for t in range(1, len(g.weights)):
        lines.append(f"  E{t} -- E{t + 1};")
    for n, a in enumerate(sorted(g.arrows), start=1):
        lines.append(f'  A{n} [shape=point, label=""];')
        lines.append(f"  E{a + 1} -- A{n} [dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"
