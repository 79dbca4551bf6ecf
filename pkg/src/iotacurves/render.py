"""SVG drawing of multicurves on the twice-punctured disk.

Layout: the U-puncture sits on the left, the Q-puncture on the right and the
cut arc runs vertically through the middle.  Side-1 points (where U-arcs
attach) stand just left of the arc, side-2 points just right of it, both
stacked by generator index.  Inside the arc neighbourhood each strand joins
side-1 point ``c`` to side-2 point ``sigma[c]``; extra entries of the normal
form are drawn as dashed crossover arrows, except inside a decorated
component, which gets a box labelled with its matrix instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .precurve import Multicurve

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b",
            "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#ff7f0e")


@dataclass(frozen=True)
class RenderOptions:
    spacing: float = 40.0
    margin: float = 60.0
    arc_gap: float = 30.0      # half-width of the strand neighbourhood
    face_reach: float = 120.0  # horizontal room for face arcs
    show_names: bool = True
    title: str = ""


def _num(x: float) -> str:
    # Fixed formatting keeps the output byte-stable.
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Canvas:
    def __init__(self):
        self.parts: list[str] = []

    def add(self, tag: str, body: str = "", **attrs):
        text = " ".join(f'{k.rstrip("_").replace("_", "-")}="{v}"'
                        for k, v in attrs.items())
        if body:
            self.parts.append(f"<{tag} {text}>{escape(body)}</{tag}>")
        else:
            self.parts.append(f"<{tag} {text}/>")


def _colours(mc: Multicurve) -> list[str]:
    out = ["#000000"] * mc.n
    for k, comp in enumerate(mc.components):
        for g in comp.generators:
            out[g] = _PALETTE[k % len(_PALETTE)]
    return out


def _bits(row: int, width: int) -> str:
    return "".join("1" if row >> j & 1 else "0" for j in range(width))


def render_svg(mc: Multicurve, options: RenderOptions | None = None) -> str:
    o = options or RenderOptions()
    n = mc.n
    height = o.margin * 2 + max(n, 1) * o.spacing
    cx = o.margin + o.face_reach + o.arc_gap + 40
    width = 2 * cx
    x1, x2 = cx - o.arc_gap, cx + o.arc_gap
    top = o.margin + o.spacing / 2

    def y(i):
        return top + i * o.spacing

    mid = o.margin + max(n, 1) * o.spacing / 2
    pu, pq = (o.margin, mid), (width - o.margin, mid)
    colour = _colours(mc)
    cv = _Canvas()

    cv.add("rect", x=_num(10), y=_num(10), width=_num(width - 20), height=_num(height - 20),
           rx=_num(40), ry=_num(40), fill="none", stroke="#444444", stroke_width="2")
    cv.add("line", x1=_num(cx), y1=_num(o.margin / 2), x2=_num(cx),
           y2=_num(height - o.margin / 2), stroke="#bbbbbb", stroke_dasharray="4 4")
    for (px, py), label in ((pu, "U"), (pq, "Q")):
        cv.add("circle", cx=_num(px), cy=_num(py), r="6", fill="#ffffff",
               stroke="#000000", stroke_width="2")
        cv.add("text", label, x=_num(px - 4), y=_num(py - 12), font_size="14")

    # Face arcs and puncture ends.
    matched_u, matched_q = set(), set()
    for m in mc.u_matching:
        matched_u |= {m.src, m.dst}
        ya, yb = y(m.src), y(m.dst)
        bulge = x1 - min(o.face_reach, 25 + abs(ya - yb) * 0.6)
        cv.add("path", d=f"M {_num(x1)} {_num(ya)} C {_num(bulge)} {_num(ya)} "
                         f"{_num(bulge)} {_num(yb)} {_num(x1)} {_num(yb)}",
               fill="none", stroke=colour[m.src], stroke_width="2")
        if m.power != 1:
            cv.add("text", str(m.power), x=_num(bulge - 14), y=_num((ya + yb) / 2 + 4),
                   font_size="12")
    for m in mc.q_matching:
        matched_q |= {m.src, m.dst}
        ya, yb = y(m.src), y(m.dst)
        bulge = x2 + min(o.face_reach, 25 + abs(ya - yb) * 0.6)
        cv.add("path", d=f"M {_num(x2)} {_num(ya)} C {_num(bulge)} {_num(ya)} "
                         f"{_num(bulge)} {_num(yb)} {_num(x2)} {_num(yb)}",
               fill="none", stroke=colour[_side2_owner(mc, m.src)], stroke_width="2")
        if m.power != 1:
            cv.add("text", str(m.power), x=_num(bulge + 6), y=_num((ya + yb) / 2 + 4),
                   font_size="12")
    for i in range(n):
        if i not in matched_u:
            cv.add("line", x1=_num(x1), y1=_num(y(i)), x2=_num(pu[0]), y2=_num(pu[1]),
                   stroke=colour[i], stroke_width="2")
        if i not in matched_q:
            cv.add("line", x1=_num(x2), y1=_num(y(i)), x2=_num(pq[0]), y2=_num(pq[1]),
                   stroke=colour[_side2_owner(mc, i)], stroke_width="2")

    # Strands and crossover arrows inside the arc neighbourhood.
    sigma = mc.sigma or tuple(range(n))
    owner = [-1] * n
    for k, comp in enumerate(mc.components):
        if comp.is_decorated():
            for g in comp.generators:
                owner[g] = k
    for c in range(n):
        cv.add("line", x1=_num(x1), y1=_num(y(c)), x2=_num(x2), y2=_num(y(sigma[c])),
               stroke=colour[c], stroke_width="2")
    for r, row in enumerate(mc.P):
        for c in range(n):
            inside = owner[c] >= 0 and owner[c] == owner[_side2_owner(mc, r)]
            if row >> c & 1 and sigma[c] != r and not inside:
                cv.add("line", x1=_num(x1 + 6), y1=_num(y(c)), x2=_num(x2 - 6),
                       y2=_num(y(r)), stroke="#555555", stroke_width="1",
                       stroke_dasharray="3 2", marker_end="url(#head)")

    for i in range(n):
        cv.add("circle", cx=_num(x1), cy=_num(y(i)), r="3", fill="#000000")
        cv.add("circle", cx=_num(x2), cy=_num(y(i)), r="3", fill="#000000")
        if o.show_names and mc.names:
            cv.add("text", mc.names[i], x=_num(cx - 8), y=_num(y(i) - 6), font_size="11")

    for k, comp in enumerate(mc.components):
        if comp.is_decorated():
            rows = ";".join(_bits(r, comp.rank) for r in comp.decoration)
            g = comp.generators[0]
            ym = (y(g) + y(sigma[g])) / 2
            bx = (cx + x2) / 2
            cv.add("rect", x=_num(bx - 9), y=_num(ym - 9), width="18", height="18",
                   fill="#ffffff", stroke=_PALETTE[k % len(_PALETTE)], stroke_width="1.5")
            cv.add("text", "X", x=_num(bx - 4), y=_num(ym + 4), font_size="11")
            cv.add("text", f"X=[{rows}]", x=_num(x2 + 8), y=_num(y(g) + 14),
                   font_size="11", fill=_PALETTE[k % len(_PALETTE)])
    if o.title:
        cv.add("text", o.title, x=_num(width / 2 - 4 * len(o.title)), y=_num(28),
               font_size="14")

    head = ('<defs><marker id="head" markerWidth="6" markerHeight="6" refX="5" refY="3" '
            'orient="auto"><path d="M 0 0 L 6 3 L 0 6 z" fill="#555555"/></marker></defs>')
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(width)}" height="{_num(height)}" '
            f'viewBox="0 0 {_num(width)} {_num(height)}">\n'
            + head + "\n" + "\n".join(cv.parts) + "\n</svg>\n")


def _side2_owner(mc: Multicurve, j: int) -> int:
    """Generator whose strand lands on side-2 point ``j``."""
    sigma = mc.sigma or tuple(range(mc.n))
    return sigma.index(j)
