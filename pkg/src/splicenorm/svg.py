"""Static SVG figure of a 2-dimensional reduced norm ball with the reduced
characteristic hyperplanes drawn across it.

Exact rationals are converted to floats only for drawing; all numbers are
printed with fixed precision so output is byte-for-byte reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .diagram import SpliceDiagram
from .errors import GeometryError
from .fibration import characteristic_hyperplanes
from .geometry import essential_basis, polygon_cycle, unit_ball

SIZE = 480
MARGIN = 40


def _f(x: float) -> str:
    return f"{x:.3f}"


def _label(v) -> str:
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def render_ball_svg(d: SpliceDiagram) -> str:
    if essential_basis(d).b_e != 2:
        raise GeometryError("plot needs a 2-dimensional reduced ball (b_e = 2)")
    ball = unit_ball(d)
    cycle = polygon_cycle(ball)
    # viewport: bounding box of the ball, enlarged by 1.2, kept square
    half = max(abs(x) for v in ball.vertices for x in v) * Fraction(6, 5)
    span = SIZE - 2 * MARGIN

    def to_px(p):
        x = MARGIN + (p[0] + half) / (2 * half) * span
        y = MARGIN + (half - p[1]) / (2 * half) * span
        return float(x), float(y)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>{escape(d.name)}: reduced norm ball</title>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    ox, oy = to_px((0, 0))
    out.append(f'<line x1="{_f(MARGIN)}" y1="{_f(oy)}" x2="{_f(SIZE - MARGIN)}" '
               f'y2="{_f(oy)}" stroke="#bbbbbb" stroke-width="1"/>')
    out.append(f'<line x1="{_f(ox)}" y1="{_f(MARGIN)}" x2="{_f(ox)}" '
               f'y2="{_f(SIZE - MARGIN)}" stroke="#bbbbbb" stroke-width="1"/>')

    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(to_px, cycle))
    out.append(f'<polygon points="{pts}" fill="#cfe3f7" stroke="#1f4e79" '
               f'stroke-width="2"/>')

    colours = ["#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085"]
    for k, h in enumerate(characteristic_hyperplanes(d)):
        a, b = h.reduced
        # direction of the line a*x + b*y = 0, scaled to cross the viewport
        dx, dy = Fraction(-b), Fraction(a)
        s = 2 * half / max(abs(dx), abs(dy))
        x1, y1 = to_px((-dx * s, -dy * s))
        x2, y2 = to_px((dx * s, dy * s))
        col = colours[k % len(colours)]
        out.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                   f'stroke="{col}" stroke-width="1.5" stroke-dasharray="6,4"/>')
        lx, ly = to_px((dx * s * Fraction(2, 5), dy * s * Fraction(2, 5)))
        out.append(f'<text x="{_f(lx)}" y="{_f(ly)}" font-size="12" fill="{col}">'
                   f'{escape(f"{a}x + {b}y = 0 ({h.node})")}</text>')

    for v in cycle:
        x, y = to_px(v)
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3.5" fill="#1f4e79"/>')
        out.append(f'<text x="{_f(x + 6)}" y="{_f(y - 6)}" font-size="11">'
                   f'{escape(_label(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
