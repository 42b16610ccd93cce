"""
SVG figures: chord diagram of a lamination and escape-time views with rays.

Coordinates are rounded so the byte stream is reproducible. Chords are drawn
as quadratic Béziers through the midpoint of the hyperbolic geodesic joining
their endpoints.
"""

import math
from fractions import Fraction
from io import BytesIO
from typing import Iterable, List, Optional, Sequence, Tuple

import drawsvg as draw
import numpy as np
from PIL import Image

from src import __version__
from src.circle import Angle
from src.dynamics import PolynomialSpec, RayTrace, escape_counts, escape_radius
from src.lamination import AngleClass, Lamination
from .quotient import ModelGraph

PANEL = 400
MARGIN = 20
RASTER = 240
ESCAPE_BUDGET = 64

CIRCLE_STROKE = "#222222"
LEAF_STROKE = "#1f4e9c"
POLYGON_FILL = "#c9d8f0"
CUT_POINT_FILL = "#c0392b"
RAY_COLORS = ("#e67e22", "#27ae60", "#8e44ad", "#c0392b", "#16a085", "#d35400")

Point = Tuple[float, float]

HALF = Fraction(1, 2)


def _r(value: float) -> float:
    return round(value, 3)


def _disk_point(a: Angle, radius: float, cx: float, cy: float) -> Point:
    theta = 2 * math.pi * a.turns()
    return _r(cx + radius * math.cos(theta)), _r(cy - radius * math.sin(theta))


def _geodesic_control(p: Angle, q: Angle, radius: float, cx: float, cy: float) -> Optional[Point]:
    """Bézier control point for the chord p-q, None for a diameter"""
    gap = (q.value - p.value) % 1
    if gap == HALF:
        return None
    if gap > HALF:
        p, q = q, p
        gap = 1 - gap
    half = math.pi * float(gap)
    depth = (1 - math.sin(half)) / math.cos(half)
    mid = 2 * math.pi * (p.turns() + float(gap) / 2)
    mx, my = cx + radius * depth * math.cos(mid), cy - radius * depth * math.sin(mid)
    px, py = _disk_point(p, radius, cx, cy)
    qx, qy = _disk_point(q, radius, cx, cy)
    return _r((4 * mx - px - qx) / 2), _r((4 * my - py - qy) / 2)


def _chord_path(path: draw.Path, p: Angle, q: Angle, radius: float, cx: float, cy: float) -> None:
    qx, qy = _disk_point(q, radius, cx, cy)
    control = _geodesic_control(p, q, radius, cx, cy)
    if control is None:
        path.L(qx, qy)
    else:
        path.Q(control[0], control[1], qx, qy)


def _class_shape(cls: AngleClass, radius: float, cx: float, cy: float) -> draw.Path:
    filled = len(cls) >= 3
    path = draw.Path(
        stroke=LEAF_STROKE,
        stroke_width=1.2,
        fill=POLYGON_FILL if filled else "none",
    )
    start = _disk_point(cls.angles[0], radius, cx, cy)
    path.M(*start)
    for p, q in cls.chords():
        _chord_path(path, p, q, radius, cx, cy)
    if filled:
        path.Z()
    return path


def _png(counts: np.ndarray, budget: int) -> bytes:
    escaped = counts < budget
    shade = np.zeros(counts.shape, dtype=np.float64)
    shade[escaped] = np.sqrt(counts[escaped] / budget)
    gray = (255 * (1 - shade)).astype(np.uint8)
    gray[~escaped] = 0
    rgb = np.stack([gray, gray, np.minimum(255, gray.astype(np.int32) + 20).astype(np.uint8)], axis=-1)
    buffer = BytesIO()
    Image.fromarray(rgb, "RGB").save(buffer, format="PNG")
    return buffer.getvalue()


def _plane_extent(spec: PolynomialSpec) -> float:
    return min(escape_radius(spec), 2.2)


def _draw_plane(
    d: draw.Drawing,
    spec: PolynomialSpec,
    traces: Sequence[RayTrace],
    left: float,
    top: float,
    size: float,
) -> None:
    extent = _plane_extent(spec)
    counts = escape_counts(spec, extent, RASTER, ESCAPE_BUDGET)
    d.append(
        draw.Image(left, top, size, size, data=_png(counts, ESCAPE_BUDGET), mime_type="image/png", embed=True)
    )
    scale = size / (2 * extent)

    def to_panel(z: complex) -> Point:
        return _r(left + (z.real + extent) * scale), _r(top + (extent - z.imag) * scale)

    for i, trace in enumerate(traces):
        inside = [z for z in trace.points if abs(z.real) <= extent and abs(z.imag) <= extent]
        if len(inside) < 2:
            continue
        coords: List[float] = []
        for z in inside:
            coords.extend(to_panel(z))
        d.append(
            draw.Lines(
                *coords,
                close=False,
                fill="none",
                stroke=RAY_COLORS[i % len(RAY_COLORS)],
                stroke_width=1.2,
            )
        )


def _finish(d: draw.Drawing) -> str:
    svg = d.as_svg()
    header, _, body = svg.partition("\n")
    if header.startswith("<?xml"):
        return f"{header}\n<!-- lamina {__version__} -->\n{body}"
    return f"<!-- lamina {__version__} -->\n{svg}"


def render_svg(
    lam: Lamination,
    model: Optional[ModelGraph] = None,
    traces: Iterable[RayTrace] = (),
    spec: Optional[PolynomialSpec] = None,
) -> str:
    """
    Unit-disk chord diagram of lam, cut points marked from the model graph.
    With a polynomial, an escape-time panel with the ray polylines is added.
    """
    traces = list(traces)
    panels = 2 if spec is not None else 1
    width = panels * PANEL + (panels + 1) * MARGIN
    height = PANEL + 2 * MARGIN
    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill="white"))

    radius = PANEL / 2
    cx, cy = MARGIN + radius, MARGIN + radius
    d.append(draw.Circle(cx, cy, radius, fill="none", stroke=CIRCLE_STROKE, stroke_width=1.5))

    for cls in lam.classes:
        if len(cls) >= 2:
            d.append(_class_shape(cls, radius, cx, cy))

    if model is not None:
        for node in model.cut_points():
            for a in node.angles:
                x, y = _disk_point(a, radius, cx, cy)
                d.append(draw.Circle(x, y, 3, fill=CUT_POINT_FILL, stroke="none"))

    if spec is not None:
        _draw_plane(d, spec, traces, 2 * MARGIN + PANEL, MARGIN, PANEL)
    return _finish(d)


def render_trace_svg(spec: PolynomialSpec, traces: Sequence[RayTrace]) -> str:
    """Escape-time picture of the filled Julia set with ray polylines on top"""
    size = PANEL + 2 * MARGIN
    d = draw.Drawing(size, size)
    d.append(draw.Rectangle(0, 0, size, size, fill="white"))
    _draw_plane(d, spec, traces, MARGIN, MARGIN, PANEL)
    return _finish(d)
