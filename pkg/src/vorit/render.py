"""SVG pictures of a point set, its Voronoi diagram and its next iterate.

Geometry stays exact until the very end: coordinates become floats only
when they are written into the SVG, and every number is printed with a
fixed format so the same input always gives the same bytes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geom import as_pointset
from .voronoi import diagram

WIDTH = 800.0
PAD = 0.10

GENERATOR_STYLE = 'fill="#000000"'
VERTEX_STYLE = 'fill="#9a9a9a" stroke="#555555" stroke-width="0.8"'
EDGE_STYLE = 'stroke="#1f4e9c" stroke-width="1.2"'
NEXT_EDGE_STYLE = 'stroke="#c0504d" stroke-width="0.8" stroke-dasharray="3,2"'
HULL_STYLE = 'fill="none" stroke="#444444" stroke-width="0.8" stroke-dasharray="6,4"'


@dataclass(frozen=True)
class RenderOptions:
    show_voronoi: bool = True
    show_hull: bool = False
    show_vertices: bool = False
    overlay_next: bool = False


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _clip(x0, y0, x1, y1, box, ray=False):
    """Liang-Barsky clip of the segment (or ray, if ``ray``) from (x0, y0)
    through (x1, y1) to ``box``; None when nothing is visible."""
    bx0, by0, bx1, by1 = box
    dx, dy = x1 - x0, y1 - y0
    lo, hi = 0.0, (float("inf") if ray else 1.0)
    for p, q in ((-dx, x0 - bx0), (dx, bx1 - x0), (-dy, y0 - by0), (dy, by1 - y0)):
        if p == 0:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            lo = max(lo, r)
        else:
            hi = min(hi, r)
        if lo > hi:
            return None
    if hi == float("inf"):
        return None
    return x0 + lo * dx, y0 + lo * dy, x0 + hi * dx, y0 + hi * dy


def _edge_lines(diag, box):
    lines = []
    for e in diag.edges:
        sx, sy = float(e.start.x), float(e.start.y)
        if e.end is not None:
            seg = _clip(sx, sy, float(e.end.x), float(e.end.y), box)
            kind = "finite"
        else:
            seg = _clip(sx, sy, sx + float(e.direction[0]), sy + float(e.direction[1]), box, ray=True)
            kind = "infinite"
        if seg is not None:
            lines.append((kind, seg))
    return lines


def render_svg(P, options: RenderOptions = RenderOptions()) -> str:
    P = as_pointset(P)
    diag, summary = diagram(P, with_geometry=True)
    V = summary.vertex_set()
    nxt = diagram(V, with_geometry=True) if options.overlay_next else None

    pts = [(float(p.x), float(p.y)) for p in list(P) + list(V)]
    if pts:
        xs, ys = [p[0] for p in pts], [p[1] for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = y0 = 0.0
        x1 = y1 = 1.0
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = PAD * span
    box = (x0 - pad, y0 - pad, x1 + pad, y1 + pad)
    bw, bh = box[2] - box[0], box[3] - box[1]
    scale = WIDTH / bw
    height = bh * scale
    r = 4.0

    def X(x):
        return _fmt((x - box[0]) * scale)

    def Y(y):
        return _fmt((box[3] - y) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(WIDTH)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(WIDTH)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]
    if options.show_voronoi:
        out.append('<g class="voronoi">')
        for kind, (ax, ay, bx, by) in _edge_lines(diag, box):
            out.append(f'<line class="edge {kind}" x1="{X(ax)}" y1="{Y(ay)}" '
                       f'x2="{X(bx)}" y2="{Y(by)}" {EDGE_STYLE}/>')
        out.append('</g>')
    if nxt is not None:
        out.append('<g class="next-voronoi">')
        for kind, (ax, ay, bx, by) in _edge_lines(nxt[0], box):
            out.append(f'<line class="next-edge {kind}" x1="{X(ax)}" y1="{Y(ay)}" '
                       f'x2="{X(bx)}" y2="{Y(by)}" {NEXT_EDGE_STYLE}/>')
        out.append('</g>')
    if options.show_hull and diag.hull is not None and len(diag.hull.boundary) >= 2:
        coords = " ".join(f"{X(float(p.x))},{Y(float(p.y))}" for p in diag.hull.boundary)
        out.append(f'<polygon class="hull" points="{coords}" {HULL_STYLE}/>')
    out.append('<g class="generators">')
    for p in P:
        out.append(f'<circle class="generator" cx="{X(float(p.x))}" cy="{Y(float(p.y))}" '
                   f'r="{_fmt(r)}" {GENERATOR_STYLE}/>')
    out.append('</g>')
    if options.show_vertices:
        out.append('<g class="vertices">')
        for q in V:
            out.append(f'<circle class="vertex" cx="{X(float(q.x))}" cy="{Y(float(q.y))}" '
                       f'r="{_fmt(r)}" {VERTEX_STYLE}/>')
        out.append('</g>')
    caption = (f"|P|={len(P)}  |vit(P)|={len(V)}  I_c={summary.i_c}" if P
               else "empty point set")
    out.append(f'<text class="caption" x="8.000" y="{_fmt(height - 8.0)}" '
               f'font-family="sans-serif" font-size="12">{caption}</text>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
