"""Deterministic SVG 1.1 rendering of drawings and dissections.

Identical inputs produce byte-identical output: coordinates are formatted
with fixed precision and every collection is iterated in sorted order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .harmonic import Drawing
from .schnyder import Dissection

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)
PRIMAL_FILL = "#aec7e8"
DUAL_FILL = "#ffbb78"


@dataclass(frozen=True)
class RenderSpec:
    width: int = 640
    height: int = 640
    margin: float = 40.0
    stroke_width: float = 2.0
    vertex_radius: float = 3.5
    labels: bool = False
    palette: tuple[str, ...] = PALETTE

    def __post_init__(self) -> None:
        if self.width <= 0 or self.height <= 0 or self.margin < 0:
            raise ValueError("render dimensions must be positive")


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _fit(points, spec: RenderSpec):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    sx = (spec.width - 2 * spec.margin) / span
    sy = (spec.height - 2 * spec.margin) / span

    def to_canvas(p):
        # flip y so the drawing appears with the usual orientation
        return (
            spec.margin + (p[0] - x0) * sx,
            spec.height - spec.margin - (p[1] - y0) * sy,
        )

    return to_canvas


def _document(body: list[str], spec: RenderSpec, verified: bool) -> str:
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
    ]
    if not verified:
        head.append("<!-- unverified drawing -->")
    return "\n".join(head + body + ["</svg>"]) + "\n"


def render_svg(obj, spec: RenderSpec | None = None, verified: bool = True) -> str:
    """Render a Drawing or a Dissection to an SVG document string."""
    spec = spec or RenderSpec()
    if isinstance(obj, Dissection):
        return _render_dissection(obj, spec, verified)
    if isinstance(obj, Drawing):
        return _render_drawing(obj, spec, verified)
    raise TypeError(f"cannot render {type(obj).__name__}")


def _render_drawing(drawing: Drawing, spec: RenderSpec, verified: bool) -> str:
    coords = drawing.coords
    to_canvas = _fit(list(coords.values()), spec)
    body = []
    if drawing.family is not None:
        for i, path in enumerate(drawing.family.segments):
            pts = " ".join(
                f"{_fmt(x)},{_fmt(y)}" for x, y in (to_canvas(coords[v]) for v in path)
            )
            color = spec.palette[i % len(spec.palette)]
            body.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(spec.stroke_width)}" stroke-linecap="round"/>'
            )
    else:
        for u, v in drawing.graph.edges:
            (x1, y1), (x2, y2) = to_canvas(coords[u]), to_canvas(coords[v])
            body.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="#333333" stroke-width="{_fmt(spec.stroke_width)}"/>'
            )
    for v in sorted(coords, key=str):
        x, y = to_canvas(coords[v])
        body.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(spec.vertex_radius)}" '
            f'fill="#000000"/>'
        )
        if spec.labels:
            body.append(
                f'<text x="{_fmt(x + 5)}" y="{_fmt(y - 5)}" font-size="11" '
                f'font-family="monospace">{v}</text>'
            )
    return _document(body, spec, verified)


def _render_dissection(d: Dissection, spec: RenderSpec, verified: bool) -> str:
    to_canvas = _fit(list(d.enclosing), spec)
    body = []
    for t in d.triangles:
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (to_canvas(p) for p in t.corners)
        )
        fill = PRIMAL_FILL if t.origin[0] == "vertex" else DUAL_FILL
        body.append(
            f'<polygon points="{pts}" fill="{fill}" stroke="#333333" '
            f'stroke-width="1.000"/>'
        )
        if spec.labels:
            cx = sum(p[0] for p in t.corners) / 3
            cy = sum(p[1] for p in t.corners) / 3
            x, y = to_canvas((cx, cy))
            body.append(
                f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="10" '
                f'text-anchor="middle" font-family="monospace">{t.origin[1]}</text>'
            )
    pts = " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (to_canvas(p) for p in d.enclosing)
    )
    body.append(
        f'<polygon points="{pts}" fill="none" stroke="#000000" '
        f'stroke-width="{_fmt(spec.stroke_width)}"/>'
    )
    return _document(body, spec, verified)
