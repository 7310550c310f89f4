"""Static SVG pictures of planar staircases, regions and fans.

Coordinates: one lattice step is one SVG unit; the picture is flipped so that
the second exponent grows upwards.  Output is byte-deterministic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import UnsupportedRepresentation
from .geometry import Region
from .monomial import MonomialIdeal


def _num(x) -> str:
    s = f"{float(x):.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


class _Canvas:
    def __init__(self, extent: int):
        self.extent = extent
        self.items: list[str] = []

    def xy(self, p) -> str:
        return f"{_num(p[0])},{_num(self.extent - p[1])}"

    def grid(self):
        e = self.extent
        for k in range(e + 1):
            self.items.append(f'<line x1="{k}" y1="0" x2="{k}" y2="{e}" stroke="#ddd" stroke-width="0.02"/>')
            self.items.append(f'<line x1="0" y1="{k}" x2="{e}" y2="{k}" stroke="#ddd" stroke-width="0.02"/>')
        self.items.append(f'<line x1="0" y1="{e}" x2="{e}" y2="{e}" stroke="#000" stroke-width="0.04"/>')
        self.items.append(f'<line x1="0" y1="0" x2="0" y2="{e}" stroke="#000" stroke-width="0.04"/>')

    def polygon(self, pts, fill, stroke):
        body = " ".join(self.xy(p) for p in pts)
        self.items.append(f'<polygon points="{body}" fill="{fill}" fill-opacity="0.5" stroke="{stroke}" stroke-width="0.05"/>')

    def dot(self, p, color):
        x, y = self.xy(p).split(",")
        self.items.append(f'<circle cx="{x}" cy="{y}" r="0.12" fill="{color}"/>')

    def text(self, p, label):
        x, y = self.xy(p).split(",")
        self.items.append(f'<text x="{x}" y="{y}" font-size="0.35" font-family="monospace">{label}</text>')

    def render(self) -> str:
        e = self.extent
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="-1 -1 {e + 2} {e + 2}">\n'
        )
        return head + "\n".join(self.items) + "\n</svg>\n"


def _upset_outline(corners: Sequence, extent: int) -> list:
    """Boundary of the union of orthants at ``corners`` (sorted by first coordinate), clipped."""
    pts = [(corners[0][0], extent)]
    for i, c in enumerate(corners):
        pts.append(c)
        if i + 1 < len(corners):
            pts.append((corners[i + 1][0], c[1]))
    pts += [(extent, corners[-1][1]), (extent, extent)]
    return pts


def _region_outline(region: Region, extent: int) -> list:
    verts = sorted(region.vertices)
    return [(verts[0][0], extent)] + verts + [(extent, verts[-1][1]), (extent, extent)]


def _extent(points) -> int:
    return max(2, math.ceil(max((max(p) for p in points), default=0)) + 2)


def plot_svg(ideal: MonomialIdeal | None = None, region: Region | None = None) -> str:
    """Staircase of ``ideal`` and/or the outline of ``region`` in one picture."""
    for n in (ideal.n if ideal else None, region.dimension if region else None):
        if n not in (None, 2):
            raise UnsupportedRepresentation("only planar objects can be plotted")
    pts = list(ideal.generators if ideal else []) + list(region.vertices if region else [])
    canvas = _Canvas(_extent(pts))
    canvas.grid()
    if region is not None:
        canvas.polygon(_region_outline(region, canvas.extent), "#9ecae1", "#08519c")
        for v in region.vertices:
            canvas.dot(v, "#08519c")
    if ideal is not None and not ideal.is_zero:
        canvas.polygon(_upset_outline(sorted(ideal.generators), canvas.extent), "#fdae6b", "#a63603")
        for g in ideal.generators:
            canvas.dot(g, "#a63603")
    return canvas.render()


def fan_svg(rays: Sequence, values: Sequence) -> str:
    """Rays of a planar fan with their values as labels."""
    length = 4
    canvas = _Canvas(length + 1)
    canvas.grid()
    for r, v in zip(rays, values):
        norm = max(r)
        end = (Fraction(r[0] * length, norm), Fraction(r[1] * length, norm))
        canvas.items.append(f'<polyline points="{canvas.xy((0, 0))} {canvas.xy(end)}" stroke="#31a354" stroke-width="0.05" fill="none"/>')
        canvas.text(end, f"({r[0]},{r[1]}): {v}")
    return canvas.render()


def vertices_csv(points: Sequence[Sequence]) -> str:
    n = len(points[0]) if points else 2
    header = ",".join(f"u{i + 1}" for i in range(n))
    return header + "\n" + "".join(",".join(str(Fraction(x)) for x in p) + "\n" for p in points)
