"""Matplotlib figure rendering for the CLI report path.

Figures are written to files (format chosen by the extension) alongside the
delimited standard-output report; the SVG renderer remains the deterministic
byte-stable output, these are for quick viewing.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection, PolyCollection

from .harmonic import Drawing
from .schnyder import Dissection
from .svg import DUAL_FILL, PALETTE, PRIMAL_FILL


def _axes():
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_aspect("equal")
    ax.axis("off")
    return fig, ax


def save_drawing_figure(drawing: Drawing, path: str, labels: bool = False) -> None:
    fig, ax = _axes()
    coords = drawing.coords
    if drawing.family is not None:
        for i, seg in enumerate(drawing.family.segments):
            pts = [coords[v] for v in seg]
            ax.plot(
                [p[0] for p in pts],
                [p[1] for p in pts],
                color=PALETTE[i % len(PALETTE)],
                linewidth=2.0,
                solid_capstyle="round",
            )
    else:
        lines = [
            (coords[u], coords[v]) for u, v in drawing.graph.edges
        ]
        ax.add_collection(LineCollection(lines, colors="#333333", linewidths=2.0))
    xs = [p[0] for p in coords.values()]
    ys = [p[1] for p in coords.values()]
    ax.scatter(xs, ys, s=18, color="black", zorder=3)
    if labels:
        for v, (x, y) in coords.items():
            ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.autoscale()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def save_dissection_figure(dissection: Dissection, path: str, labels: bool = False) -> None:
    fig, ax = _axes()
    primal = [t.corners for t in dissection.triangles if t.origin[0] == "vertex"]
    dual = [t.corners for t in dissection.triangles if t.origin[0] == "face"]
    ax.add_collection(
        PolyCollection(primal, facecolors=PRIMAL_FILL, edgecolors="#333333")
    )
    ax.add_collection(
        PolyCollection(dual, facecolors=DUAL_FILL, edgecolors="#333333")
    )
    ax.add_collection(
        PolyCollection([dissection.enclosing], facecolors="none", edgecolors="black", linewidths=2.0)
    )
    if labels:
        for t in dissection.triangles:
            cx = sum(p[0] for p in t.corners) / 3
            cy = sum(p[1] for p in t.corners) / 3
            ax.annotate(str(t.origin[1]), (cx, cy), ha="center", fontsize=7)
    ax.autoscale()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
