"""Deterministic SVG drawings of point configurations.

Every pair of points is joined by a segment; segments carrying a third
point of the configuration are dashed. Output depends only on the input
configuration, so drawings can be compared byte for byte.
"""

from __future__ import annotations

from itertools import combinations

from distinct_triangles.pointfile import PointSet

CANVAS = 600
MARGIN = 0.10
POINT_RADIUS = 4


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(ps: PointSet, title: str = "") -> str:
    verts = ps.vertices()
    xy = [ps.float_xy(v) for v in verts]
    xs = [p[0] for p in xy]
    ys = [p[1] for p in xy]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    inner = CANVAS * (1 - 2 * MARGIN)
    scale = inner / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def to_canvas(p):
        return CANVAS / 2 + (p[0] - cx) * scale, CANVAS / 2 - (p[1] - cy) * scale

    canvas_xy = [to_canvas(p) for p in xy]
    n = len(verts)
    dashed = set()
    for i, j, k in combinations(range(n), 3):
        if ps.collinear(verts[i], verts[j], verts[k]):
            dashed.update({(i, j), (i, k), (j, k)})

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
    ]
    if title:
        out.append(f"  <title>{_escape(title)}</title>")
    out.append(f'  <rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>')
    out.append('  <g id="segments" stroke="#1f3b73" stroke-width="1.5">')
    for i, j in combinations(range(n), 2):
        (x1, y1), (x2, y2) = canvas_xy[i], canvas_xy[j]
        dash = ' stroke-dasharray="6 4"' if (i, j) in dashed else ""
        out.append(f'    <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"{dash}/>')
    out.append("  </g>")
    out.append('  <g id="points" fill="#0000ff">')
    for x, y in canvas_xy:
        out.append(f'    <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{POINT_RADIUS}"/>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
