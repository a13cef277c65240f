"""Plan drawings as SVG.

Coordinates are millimetres with y flipped so north is up. Rendering only
reads the document.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from ..geom import min_bounding_rect
from ..kernel import LayoutDocument

FILL = {"living room": "#f6d8ae", "bedroom": "#b8d8f0", "bathroom": "#c7ecd0", "kitchen": "#f3c1c1"}
MARGIN = 600.0


def _f(v: float) -> str:
    v = round(v, 2) + 0.0
    return str(int(v)) if v.is_integer() else f"{v:.2f}".rstrip("0")


def render_svg(doc: LayoutDocument, scale: float = 0.05) -> str:
    """SVG text; ``scale`` is pixels per millimetre for the outer size."""
    rects = [r for m in doc.modules.values() for r in m.region] + [r.rect for r in doc.rooms.values()]
    if rects:
        box = min_bounding_rect(rects)
        x0, y1 = box.x - MARGIN, box.y1 + MARGIN
        w, h = box.length + 2 * MARGIN, box.width + 2 * MARGIN
    else:
        x0, y1, w, h = 0.0, 1000.0, 1000.0, 1000.0

    def X(x):
        return _f(x - x0)

    def Y(y):
        return _f(y1 - y)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w * scale)}" height="{_f(h * scale)}" '
           f'viewBox="0 0 {_f(w)} {_f(h)}">',
           f'<rect x="0" y="0" width="{_f(w)}" height="{_f(h)}" fill="#ffffff"/>']
    out.append('<g id="rooms">')
    for r in doc.rooms.values():
        rc = r.rect
        out.append(f'<rect x="{X(rc.x)}" y="{Y(rc.y1)}" width="{_f(rc.length)}" height="{_f(rc.width)}" '
                   f'fill="{FILL.get(r.label, "#e6e6e6")}" fill-opacity="0.8"/>')
    out.append("</g>")
    out.append('<g id="modules" fill="none" stroke="#7a7a7a" stroke-width="20" stroke-dasharray="120 80">')
    for m in doc.modules.values():
        pts = " ".join(f"{X(p.x)},{Y(p.y)}" for p in m.outline.vertices)
        out.append(f'<polygon points="{pts}"/>')
    out.append("</g>")
    out.append('<g id="walls" stroke="#222222" stroke-linecap="square">')
    for wl in doc.walls.values():
        (ax, ay), (bx, by) = wl.centerline
        out.append(f'<line x1="{X(ax)}" y1="{Y(ay)}" x2="{X(bx)}" y2="{Y(by)}" stroke-width="{_f(wl.thickness)}"/>')
    out.append("</g>")
    out.append('<g id="openings">')
    for kind, coll in (("door", doc.doors), ("hole", doc.holes)):
        for o in coll.values():
            axis, c, lo, hi = doc.opening_geometry(o)
            t = doc.walls[o.wall_id].thickness + 4
            if axis == "h":
                p, q = (lo, c), (hi, c)
            else:
                p, q = (c, lo), (c, hi)
            out.append(f'<line x1="{X(p[0])}" y1="{Y(p[1])}" x2="{X(q[0])}" y2="{Y(q[1])}" stroke="#ffffff" '
                       f'stroke-width="{_f(t)}"/>')
            if kind == "door":
                # leaf swings a quarter circle from the low end of the opening
                d = o.dimension
                if axis == "h":
                    leaf = (p[0], p[1] + d)
                    arc = f"M {X(leaf[0])} {Y(leaf[1])} A {_f(d)} {_f(d)} 0 0 1 {X(q[0])} {Y(q[1])}"
                else:
                    leaf = (p[0] + d, p[1])
                    arc = f"M {X(leaf[0])} {Y(leaf[1])} A {_f(d)} {_f(d)} 0 0 0 {X(q[0])} {Y(q[1])}"
                out.append(f'<line x1="{X(p[0])}" y1="{Y(p[1])}" x2="{X(leaf[0])}" y2="{Y(leaf[1])}" '
                           f'stroke="#8a4b08" stroke-width="25"/>')
                out.append(f'<path d="{arc}" fill="none" stroke="#8a4b08" stroke-width="12"/>')
            else:
                out.append(f'<line x1="{X(p[0])}" y1="{Y(p[1])}" x2="{X(q[0])}" y2="{Y(q[1])}" stroke="#444444" '
                           f'stroke-width="12" stroke-dasharray="60 40"/>')
    out.append("</g>")
    out.append('<g id="labels" font-family="sans-serif" font-size="220" text-anchor="middle" fill="#111111">')
    for r in doc.rooms.values():
        out.append(f'<text x="{X(r.center.x)}" y="{Y(r.center.y)}">{escape(r.name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
