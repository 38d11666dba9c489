"""Deterministic SVG diagrams of node sets and curves.

The bounding box of the nodes is mapped onto a fixed 800 x 800 viewport
with a 5% margin, keeping the aspect ratio and flipping y so that it points
up.  Coordinates are printed with three decimals, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .analysis import NodeSet, maximal_lines
from .poly import Curve, Line, Poly, as_line

SIZE = 800
MARGIN = SIZE // 20
GRID = 96  # marching-squares resolution for non-line factors

NODE_STYLE = 'r="5" fill="#1f2937"'
LINE_STYLE = 'stroke="#6b7280" stroke-width="1.5"'
MAXIMAL_STYLE = 'stroke="#dc2626" stroke-width="2.5"'
APPROX_STYLE = 'fill="none" stroke="#2563eb" stroke-width="1.5" stroke-dasharray="4 3"'


@dataclass
class Rendering:
    svg: str
    circles: int = 0
    strokes: int = 0
    highlighted: int = 0
    approximated: list[str] = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return bool(self.approximated)


class _Frame:
    """World-to-viewport map for a rational bounding box."""

    def __init__(self, X: NodeSet):
        xs = [p.x for p in X] or [Fraction(0)]
        ys = [p.y for p in X] or [Fraction(0)]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0) or Fraction(1)
        self.scale = Fraction(SIZE - 2 * MARGIN) / span
        # center the box inside the drawable square
        self.ox = Fraction(MARGIN) + (span - (x1 - x0)) * self.scale / 2 - x0 * self.scale
        self.oy = Fraction(MARGIN) + (span - (y1 - y0)) * self.scale / 2 + y1 * self.scale
        # world extent of the whole viewport, used for clipping
        self.wx0 = (0 - self.ox) / self.scale
        self.wx1 = (SIZE - self.ox) / self.scale
        self.wy1 = self.oy / self.scale
        self.wy0 = (self.oy - SIZE) / self.scale

    def to_view(self, x, y) -> tuple[float, float]:
        return float(self.ox + Fraction(x) * self.scale), float(self.oy - Fraction(y) * self.scale)


def _fmt(v: float) -> str:
    return "%.3f" % v


def _clip_line(line: Line, fr: _Frame) -> Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]:
    """Segment of ``line`` inside the viewport, computed exactly."""
    a, b, c = Fraction(line.a), Fraction(line.b), Fraction(line.c)
    pts = []
    if b != 0:
        for x in (fr.wx0, fr.wx1):
            y = -(a * x + c) / b
            if fr.wy0 <= y <= fr.wy1:
                pts.append((x, y))
    if a != 0:
        for y in (fr.wy0, fr.wy1):
            x = -(b * y + c) / a
            if fr.wx0 <= x <= fr.wx1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def _line_element(line: Line, fr: _Frame, style: str, cls: str) -> Optional[str]:
    seg = _clip_line(line, fr)
    if seg is None:
        return None
    (x1, y1), (x2, y2) = fr.to_view(*seg[0]), fr.to_view(*seg[1])
    return (
        f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
        f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" {style}/>'
    )


def _contour_path(p: Poly, fr: _Frame) -> str:
    """Marching-squares approximation of the zero set of p, as SVG path data."""
    coeffs = [(i, j, float(c)) for (i, j), c in p.terms().items()]

    def f(px: int, py: int) -> float:
        x = float((Fraction(px * SIZE, GRID) - fr.ox) / fr.scale)
        y = float((fr.oy - Fraction(py * SIZE, GRID)) / fr.scale)
        return sum(c * x ** i * y ** j for i, j, c in coeffs)

    vals = [[f(px, py) for px in range(GRID + 1)] for py in range(GRID + 1)]
    step = SIZE / GRID
    parts = []

    def cross(px0, py0, v0, px1, py1, v1):
        t = v0 / (v0 - v1)
        return ((px0 + t * (px1 - px0)) * step, (py0 + t * (py1 - py0)) * step)

    for py in range(GRID):
        for px in range(GRID):
            corners = [
                (px, py, vals[py][px]),
                (px + 1, py, vals[py][px + 1]),
                (px + 1, py + 1, vals[py + 1][px + 1]),
                (px, py + 1, vals[py + 1][px]),
            ]
            hits = []
            for (ax, ay, av), (bx, by, bv) in zip(corners, corners[1:] + corners[:1]):
                if (av <= 0 < bv) or (bv <= 0 < av):
                    hits.append(cross(ax, ay, av, bx, by, bv))
            for s in range(0, len(hits) - 1, 2):
                (x1, y1), (x2, y2) = hits[s], hits[s + 1]
                parts.append(f"M{_fmt(x1)} {_fmt(y1)}L{_fmt(x2)} {_fmt(y2)}")
    return "".join(parts)


def render_svg(
    X: NodeSet,
    curves: Sequence[Curve] = (),
    degree: Optional[int] = None,
    highlight_maximal: bool = False,
) -> Rendering:
    """Nodes as circles, line factors as clipped strokes, other factors approximated.

    With ``highlight_maximal`` the maximal lines of X for ``degree`` are
    drawn in a distinct style, added if no curve supplies them.
    """
    if highlight_maximal and degree is None:
        raise ValueError("highlighting maximal lines needs a degree")
    fr = _Frame(X)
    out = Rendering("")
    maximal = set(maximal_lines(X, degree)) if highlight_maximal else set()

    lines: list[Line] = []
    others: list[Poly] = []
    for f in curves:
        for fac in f.factors:
            line = as_line(fac)
            if line is not None:
                line = line.normalized()
                if line not in lines:
                    lines.append(line)
            else:
                others.append(fac)
    lines += sorted(maximal - set(lines), key=lambda l: (l.a, l.b, l.c))

    body = []
    for line in lines:
        hl = line in maximal
        el = _line_element(
            line, fr, MAXIMAL_STYLE if hl else LINE_STYLE, "line maximal" if hl else "line"
        )
        if el is not None:
            body.append(el)
            out.strokes += 1
            out.highlighted += hl
    for p in others:
        body.append(f'<path class="approx" d="{_contour_path(p, fr)}" {APPROX_STYLE}/>')
        out.approximated.append(str(p))
    for pt in X:
        cx, cy = fr.to_view(pt.x, pt.y)
        body.append(f'<circle class="node" cx="{_fmt(cx)}" cy="{_fmt(cy)}" {NODE_STYLE}/>')
        out.circles += 1

    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">'
    )
    out.svg = "\n".join([head, f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>', *body, "</svg>"]) + "\n"
    return out
