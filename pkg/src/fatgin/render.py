"""Static SVG panels of limiting shapes.

Coordinates in the SVG are decimal and only for display; the vertex labels
carry the exact values.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from xml.sax.saxutils import escape

from .errors import ValidationError
from .polytope import LimitReport, RationalPolygon

X_MAX, Y_MAX = 4, 7
UNIT = 40
MARGIN = 36
COLUMNS = 4
PANEL_W = X_MAX * UNIT + 2 * MARGIN
PANEL_H = Y_MAX * UNIT + 2 * MARGIN


def _num(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _label(p) -> str:
    return f"({p[0]}, {p[1]})"


def _panel(title: str, poly: RationalPolygon, ox: int, oy: int) -> list[str]:
    def sx(x: Fraction) -> str:
        return _num(ox + MARGIN + float(x) * UNIT)

    def sy(y: Fraction) -> str:
        return _num(oy + MARGIN + (Y_MAX - float(y)) * UNIT)

    zero = Fraction(0)
    out = [f'<g class="panel">',
           f'<text x="{sx(zero)}" y="{_num(oy + MARGIN / 2)}" font-size="13">{escape(title)}</text>',
           f'<line x1="{sx(zero)}" y1="{sy(zero)}" x2="{sx(Fraction(X_MAX))}" y2="{sy(zero)}" stroke="black"/>',
           f'<line x1="{sx(zero)}" y1="{sy(zero)}" x2="{sx(zero)}" y2="{sy(Fraction(Y_MAX))}" stroke="black"/>']
    for k in range(1, X_MAX + 1):
        out.append(f'<text x="{sx(Fraction(k))}" y="{_num(oy + MARGIN + Y_MAX * UNIT + 14)}" '
                   f'font-size="9" text-anchor="middle">{k}</text>')
    for k in range(1, Y_MAX + 1):
        out.append(f'<text x="{_num(ox + MARGIN - 6)}" y="{sy(Fraction(k))}" '
                   f'font-size="9" text-anchor="end">{k}</text>')
    pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in poly.vertices)
    out.append(f'<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="2"/>')
    for v in poly.vertices:
        out.append(f'<circle cx="{sx(v[0])}" cy="{sy(v[1])}" r="2.5" fill="#1f4e9c"/>')
        out.append(f'<text class="vertex" x="{_num(float(sx(v[0])) + 4)}" y="{_num(float(sy(v[1])) - 4)}" '
                   f'font-size="10">{escape(_label(v))}</text>')
    out.append("</g>")
    return out


def _as_panel(item, index: int) -> tuple[str, RationalPolygon]:
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[0], str):
        title, body = item
    else:
        title, body = f"panel {index + 1}", item
    if isinstance(body, LimitReport):
        body = body.limit
    if not isinstance(body, RationalPolygon):
        raise ValidationError(f"cannot draw {type(body).__name__}")
    return title, body


def render_figure(reports, path=None) -> str:
    """One panel per report, laid out in rows of four.

    ``reports`` holds LimitReports or polygons, each optionally paired with a
    title.  The document is returned and also written to ``path`` if given.
    """
    panels = [_as_panel(item, k) for k, item in enumerate(reports)]
    if not panels:
        raise ValidationError("nothing to draw")
    cols = min(COLUMNS, len(panels))
    rows = (len(panels) + cols - 1) // cols
    width, height = cols * PANEL_W, rows * PANEL_H
    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}" font-family="sans-serif">',
             "<!-- decimal coordinates are for display only; labels are exact -->"]
    for k, (title, poly) in enumerate(panels):
        lines += _panel(title, poly, (k % cols) * PANEL_W, (k // cols) * PANEL_H)
    lines.append("</svg>")
    doc = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(doc)
    return doc
