"""Keisler microscope: coordinates of germs in the halo of a center.

A view magnifies by ``1/unit``: a point sits at ``st((value - center)/unit)``
when that ratio is limited, otherwise it is out of view on one side.
"""
import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import DivisionByZero
from .germ import Classification, Hyperreal, classify, from_rational, st


class Position(enum.Enum):
    IN_VIEW = "InView"
    AT_CENTER_BLUR = "AtCenterBlur"
    OUT_OF_VIEW = "OutOfView"


def _germ(x):
    return x if isinstance(x, Hyperreal) else from_rational(x)


@dataclass(frozen=True)
class MicroscopeView:
    center: Hyperreal
    unit: Hyperreal
    points: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "center", _germ(self.center))
        object.__setattr__(self, "unit", _germ(self.unit))
        object.__setattr__(self, "points", tuple((str(lbl), _germ(v)) for lbl, v in self.points))
        if self.unit.is_zero():
            raise DivisionByZero("microscope unit is the zero germ")


@dataclass(frozen=True)
class Placement:
    label: str
    position: Position
    coordinate: Fraction = None  # InView coordinate, or the unit^2 coordinate when blurred
    direction: int = None  # -1 / +1 for OutOfView

    def describe(self):
        if self.position is Position.OUT_OF_VIEW:
            return f"{self.label}: OutOfView({'-' if self.direction < 0 else '+'})"
        if self.position is Position.AT_CENTER_BLUR:
            return f"{self.label}: AtCenterBlur({self.coordinate} at unit^2)"
        return f"{self.label}: InView({self.coordinate})"


def _coordinate(offset, unit):
    ratio = offset / unit
    if classify(ratio) is Classification.INFINITE:
        return None, ratio.sign()
    return st(ratio), None


def place(view, resolve_blur=False):
    """Place every point of ``view``.

    Offsets of higher infinitesimal order than ``unit`` land on 0.  With
    ``resolve_blur`` such points are reported as AtCenterBlur together with
    their coordinate at magnification ``unit**2``.
    """
    out = []
    for label, value in view.points:
        offset = value - view.center
        coord, direction = _coordinate(offset, view.unit)
        if coord is None:
            out.append(Placement(label, Position.OUT_OF_VIEW, direction=direction))
        elif resolve_blur and coord == 0 and not offset.is_zero():
            fine, fine_dir = _coordinate(offset, view.unit * view.unit)
            # a zero st at unit^2 would need unit^3; report the sign via the coordinate only
            if fine is None:
                fine = Fraction(fine_dir)
            out.append(Placement(label, Position.AT_CENTER_BLUR, coordinate=fine))
        else:
            out.append(Placement(label, Position.IN_VIEW, coordinate=coord))
    return out


def _plotted(placements):
    pts = []
    for p in placements:
        if p.position is Position.IN_VIEW:
            pts.append((p.coordinate, p.label))
        elif p.position is Position.AT_CENTER_BLUR:
            pts.append((Fraction(0), p.label))
    return sorted(pts)


def _scaler(coords, lo_px, hi_px):
    lo, hi = min(coords), max(coords)
    if lo == hi:
        mid = Fraction(lo_px + hi_px, 2)
        return lambda c: mid
    span = Fraction(hi_px - lo_px) / (hi - lo)
    return lambda c: lo_px + (c - lo) * span


def _pack(items, width):
    """Greedy row packing of (column, text) pairs; returns text rows."""
    rows = []
    for col, text in items:
        start = min(max(col - len(text) // 2, 0), max(width - len(text), 0))
        for row in rows:
            if row[0] < start:
                break
        else:
            row = [-2, [" "] * width]
            rows.append(row)
        row[1][start:start + len(text)] = list(text)
        row[1] = row[1][:width]
        row[0] = start + len(text)
    return ["".join(r[1]).rstrip() for r in rows]


def render_ascii(placements, width=60):
    """One-line number axis with ticks, coordinates, labels and a legend."""
    if width < 20:
        raise ValueError("width must be at least 20")
    axis = ["-"] * width
    axis[0], axis[-1] = "<", ">"
    lines = []
    pts = _plotted(placements)
    if pts:
        scale = _scaler([c for c, _ in pts], 2, width - 3)
        cols = [(math.floor(scale(c) + Fraction(1, 2)), c, lbl) for c, lbl in pts]
        for col, _, _ in cols:
            axis[col] = "+"
        seen = {}
        for col, c, _ in cols:
            seen.setdefault(col, str(c))
        lines.extend(_pack(sorted(seen.items()), width))
        lines.extend(_pack([(col, lbl) for col, _, lbl in cols], width))
    lines.insert(0, "".join(axis))
    for p in sorted(placements, key=lambda p: (p.position.value, p.direction or 0, p.label)):
        if p.position is Position.OUT_OF_VIEW:
            arrow = "<-" if p.direction < 0 else "->"
            lines.append(f"{arrow} {p.label} (out of view)")
        elif p.position is Position.AT_CENTER_BLUR:
            lines.append(f"~ {p.label} (blurred at center; {p.coordinate} at unit^2)")
    return "\n".join(lines) + "\n"


def _num(x):
    r = round(Fraction(x), 2)
    if r.denominator == 1:
        return str(int(r))
    return f"{float(r):.2f}".rstrip("0").rstrip(".")


SVG_WIDTH, SVG_HEIGHT = 800, 200


def svg_document(placements):
    """Standalone SVG 1.1 text for ``placements`` (fixed 800x200 viewport)."""
    w, h, y = SVG_WIDTH, SVG_HEIGHT, SVG_HEIGHT // 2
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
        f'<line x1="20" y1="{y}" x2="{w - 20}" y2="{y}" stroke="black" stroke-width="1"/>',
        f'<polygon points="20,{y - 5} 10,{y} 20,{y + 5}" fill="black"/>',
        f'<polygon points="{w - 20},{y - 5} {w - 10},{y} {w - 20},{y + 5}" fill="black"/>',
    ]
    text = 'font-family="monospace" font-size="12"'
    pts = _plotted(placements)
    if pts:
        scale = _scaler([c for c, _ in pts], w // 10, w - w // 10)
        stack = {}
        for c, lbl in pts:
            x = _num(scale(c))
            level = stack.get(c, 0)
            stack[c] = level + 1
            if level == 0:
                out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
                out.append(f'<text x="{x}" y="{y + 20}" text-anchor="middle" {text}>{escape(str(c))}</text>')
            out.append(f'<text x="{x}" y="{y - 12 - 14 * level}" text-anchor="middle" {text}>{escape(lbl)}</text>')
    legend_y = h - 30
    for p in sorted(placements, key=lambda p: (p.position.value, p.direction or 0, p.label)):
        if p.position is Position.OUT_OF_VIEW:
            if p.direction < 0:
                out.append(f'<text x="20" y="{legend_y}" {text}>{escape("<- " + p.label)}</text>')
            else:
                out.append(f'<text x="{w - 20}" y="{legend_y}" text-anchor="end" {text}>'
                           f'{escape(p.label + " ->")}</text>')
            legend_y += 14
        elif p.position is Position.AT_CENTER_BLUR:
            note = f"~ {p.label} ({p.coordinate} at unit^2)"
            out.append(f'<text x="{w // 2}" y="{legend_y}" text-anchor="middle" {text}>{escape(note)}</text>')
            legend_y += 14
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(placements, path):
    """Write the SVG document to ``path`` and return its text."""
    doc = svg_document(placements)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(doc)
    return doc
