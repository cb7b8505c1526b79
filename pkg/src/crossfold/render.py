"""SVG 1.1 pictures of Gamma_n and D_3.

Geometry here is cosmetic.  Captions carry the exact counts from the
combinatorial counters.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .arc_diagram import ArcDrawing, Half, build_gamma, count_crossings
from .folded_upper import CoordinateDrawing, count_segment_crossings, d3_base_drawing

RENDER_MAX_N = 8

_HEADER = ('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
           '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" '
           '"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n')


def _svg_open(width: float, height: float) -> str:
    return (f'<svg version="1.1" xmlns="http://www.w3.org/2000/svg" '
            f'width="{width:.0f}" height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">\n')


def gamma_svg(d: ArcDrawing, *, crossings: int | None = None) -> str:
    if crossings is None:
        crossings = count_crossings(d).total
    npos = 1 << d.n
    dx = max(12.0, 640.0 / npos)
    margin = 30.0
    width = 2 * margin + dx * (npos - 1)
    # arc height grows with span, half the span at most
    reach = dx * npos / 2 * 0.6
    height = 2 * reach + 2 * margin + 30
    axis = margin + reach

    def x_of(c: Fraction) -> float:
        return margin + float(c) * dx

    out = [_HEADER, _svg_open(width, height),
           f'<title>Gamma_{d.n}</title>\n',
           f'<line x1="{margin - 10:.2f}" y1="{axis:.2f}" x2="{width - margin + 10:.2f}" '
           f'y2="{axis:.2f}" stroke="#bbbbbb" stroke-width="0.5"/>\n',
           '<g fill="none" stroke-width="1">\n']
    for s in d.segments:
        x0, x1 = x_of(s.left), x_of(s.right)
        rx = (x1 - x0) / 2
        ry = rx * 0.6
        sweep = 1 if s.half is Half.UPPER else 0
        colour = "#c0392b" if (s.edge[0] ^ s.edge[1]).bit_length() == d.n else "#2c3e50"
        out.append(f'<path d="M {x0:.3f} {axis:.2f} A {rx:.3f} {ry:.3f} 0 0 {sweep} '
                   f'{x1:.3f} {axis:.2f}" stroke="{colour}"/>\n')
    out.append('</g>\n<g font-family="monospace" font-size="8" text-anchor="middle">\n')
    for x in range(npos):
        cx = margin + d.positions[x] * dx
        out.append(f'<circle cx="{cx:.2f}" cy="{axis:.2f}" r="2.5" fill="black"/>\n')
        if d.n <= 5:
            out.append(f'<text x="{cx:.2f}" y="{axis + 12:.2f}">{format(x, f"0{d.n}b")}</text>\n')
    out.append('</g>\n')
    out.append(f'<text x="{margin:.2f}" y="{height - 10:.2f}" font-family="sans-serif" '
               f'font-size="12">{escape(f"Gamma_{d.n}: crossings = {crossings}")}</text>\n')
    out.append('</svg>\n')
    return "".join(out)


def d3_svg(d: CoordinateDrawing | None = None, *, crossings: int | None = None) -> str:
    if d is None:
        d = d3_base_drawing()
    if crossings is None:
        crossings = count_segment_crossings(d).total
    scale, size = 70.0, 360.0
    centre = size / 2

    def at(p) -> tuple[float, float]:
        return centre + float(p[0]) * scale, centre - float(p[1]) * scale

    out = [_HEADER, _svg_open(size, size + 30), '<title>D_3</title>\n',
           '<g stroke-width="1">\n']
    for u, v in d.edges:
        (x0, y0), (x1, y1) = at(d.points[u]), at(d.points[v])
        colour = "#c0392b" if (u.value ^ v.value) == 7 else "#2c3e50"
        out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="{colour}"/>\n')
    out.append('</g>\n<g font-family="monospace" font-size="10">\n')
    for v, p in sorted(d.points.items()):
        x, y = at(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3.5" fill="black"/>\n')
        out.append(f'<text x="{x + 5:.2f}" y="{y - 5:.2f}">{v}</text>\n')
    out.append('</g>\n')
    out.append(f'<text x="10" y="{size + 20:.2f}" font-family="sans-serif" font-size="12">'
               f'{escape(f"D_3: crossings = {crossings}")}</text>\n</svg>\n')
    return "".join(out)


def render_gamma(n: int) -> str:
    if not 1 <= n <= RENDER_MAX_N:
        raise ValueError(f"rendering needs 1 <= n <= {RENDER_MAX_N}, got {n}")
    return gamma_svg(build_gamma(n))
